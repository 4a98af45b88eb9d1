//! Ordinals below ε₀ in hereditary Cantor normal form.
//!
//! An [`Ordinal`] is a list of `(exponent, coefficient)` terms with strictly
//! decreasing exponents and positive coefficients, read as
//! `ω^e₁·c₁ + … + ω^eₖ·cₖ`. The empty list is `0`.
//!
//! Text form: `ord := "0" | term ("+" term)*`, `term := base ("*" nat)?`,
//! `base := "w" | "w^(" ord ")" | nat`. Parsing folds terms with ordinal
//! addition, so `1+w` reads as `w`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use thiserror::Error;

/// Largest height accepted by [`omega_tower`].
pub const MAX_TOWER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("{0} is not a limit ordinal")]
    NotLimit(Ordinal),
    #[error("tower height {0} exceeds {MAX_TOWER}")]
    TowerTooTall(usize),
    #[error("coefficient overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid ordinal at byte {position}: {message}")]
pub struct ParseOrdinalError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Term {
    exponent: Ordinal,
    coefficient: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn one() -> Self {
        Ordinal::from_nat(1)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    pub fn from_nat(k: u64) -> Self {
        Ordinal::omega_pow_times(Ordinal::zero(), k)
    }

    /// `ω^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::omega_pow_times(exponent, 1)
    }

    /// `ω^exponent · coefficient`; zero when `coefficient` is zero.
    pub fn omega_pow_times(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exponent, coefficient }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, or `None` if
    /// the exponents are not strictly decreasing or a coefficient is zero.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Option<Self> {
        let valid = terms.iter().all(|(_, c)| *c > 0)
            && terms.windows(2).all(|p| p[0].0 > p[1].0);
        valid.then(|| Ordinal {
            terms: terms
                .into_iter()
                .map(|(exponent, coefficient)| Term { exponent, coefficient })
                .collect(),
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Ordinal, u64)> + '_ {
        self.terms.iter().map(|t| (&t.exponent, t.coefficient))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => Some(t.coefficient),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.to_nat().is_some()
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn succ(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        self.is_successor().then(|| self.peel_last_unit().0)
    }

    /// Number of summands in the expanded form `ω^e₁ + ω^e₂ + …` (the sum of
    /// the coefficients).
    pub fn summand_count(&self) -> u64 {
        self.terms.iter().map(|t| t.coefficient).sum()
    }

    /// Hereditary summand count: every summand `ω^e` contributes one plus the
    /// size of `e`. Equals the number of non-root nodes of the ordinal's tree.
    pub fn size(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * (1 + t.exponent.size()))
            .sum()
    }

    /// Splits off one copy of the last summand: `α = prefix + ω^e`.
    /// Must not be called on zero.
    fn peel_last_unit(&self) -> (Ordinal, Ordinal) {
        let mut prefix = self.clone();
        let last = prefix.terms.last_mut().expect("peel_last_unit on zero");
        let exponent = last.exponent.clone();
        if last.coefficient > 1 {
            last.coefficient -= 1;
        } else {
            prefix.terms.pop();
        }
        (prefix, exponent)
    }

    /// Ordinal addition, or `None` on coefficient overflow.
    pub fn checked_add(&self, other: &Ordinal) -> Option<Ordinal> {
        let Some(head) = other.terms.first() else {
            return Some(self.clone());
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        let mut rest = other.terms.iter();
        if let Some(last) = terms.last_mut() {
            if last.exponent == head.exponent {
                last.coefficient = last.coefficient.checked_add(head.coefficient)?;
                rest.next();
            }
        }
        terms.extend(rest.cloned());
        Some(Ordinal { terms })
    }
}

impl Ord for Ordinal {
    /// Term by term: larger exponent wins, then larger coefficient; a proper
    /// prefix is smaller.
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.terms.iter().zip(&other.terms) {
            let ord = x
                .exponent
                .cmp(&y.exponent)
                .then(x.coefficient.cmp(&y.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    /// Panics on coefficient overflow; see [`Ordinal::checked_add`].
    fn add(self, rhs: &Ordinal) -> Ordinal {
        self.checked_add(rhs).expect("ordinal coefficient overflow")
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        &self + &rhs
    }
}

pub fn ord_cmp(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

pub fn ord_add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    a + b
}

/// `ω₀ = 1`, `ωₙ₊₁ = ω^ωₙ`.
pub fn omega_tower(n: usize) -> Result<Ordinal, OrdinalError> {
    if n > MAX_TOWER {
        return Err(OrdinalError::TowerTooTall(n));
    }
    Ok((0..n).fold(Ordinal::one(), |acc, _| Ordinal::omega_pow(acc)))
}

/// `ψ(0) = ω`; otherwise the last summand `ω^e` becomes `ω^(e+1)`, absorbing
/// any equal summands before it.
pub fn psi(a: &Ordinal) -> Ordinal {
    if a.is_zero() {
        return Ordinal::omega();
    }
    let (prefix, exponent) = a.peel_last_unit();
    &prefix + &Ordinal::omega_pow(exponent.succ())
}

/// Whether `a` is closed under [`psi`], decided structurally: `a` is zero or
/// `ω^(ω·β)` with `β ≥ 1`.
pub fn is_psi_closed(a: &Ordinal) -> bool {
    match a.terms.as_slice() {
        [] => true,
        [t] => {
            t.coefficient == 1
                && !t.exponent.is_zero()
                && t.exponent.terms.iter().all(|u| !u.exponent.is_zero())
        }
        _ => false,
    }
}

/// The `n`-th member `a[n]` of the standard fundamental sequence of a limit.
pub fn cofinal(a: &Ordinal, n: u64) -> Result<Ordinal, OrdinalError> {
    if !a.is_limit() {
        return Err(OrdinalError::NotLimit(a.clone()));
    }
    let (prefix, exponent) = a.peel_last_unit();
    let tail = match exponent.pred() {
        Some(beta) => Ordinal::omega_pow_times(beta, n.checked_add(1).ok_or(OrdinalError::Overflow)?),
        None => Ordinal::omega_pow(cofinal(&exponent, n)?),
    };
    Ok(&prefix + &tail)
}

/// The `n` with `cofinal(b, n) = a`, if there is one.
pub fn cofinal_index(b: &Ordinal, a: &Ordinal) -> Option<u64> {
    if !b.is_limit() {
        return None;
    }
    let (prefix, exponent) = b.peel_last_unit();
    // a must be prefix followed by exactly one more term
    let p = prefix.terms.len();
    if a.terms.len() != p + 1 || a.terms[..p] != prefix.terms[..] {
        return None;
    }
    let last = &a.terms[p];
    match exponent.pred() {
        Some(beta) => (last.exponent == beta).then(|| last.coefficient - 1),
        None => {
            if last.coefficient != 1 {
                return None;
            }
            cofinal_index(&exponent, &last.exponent)
        }
    }
}

/// `b = a + 1`, or `a` is a member of the fundamental sequence of `b`.
pub fn is_r(a: &Ordinal, b: &Ordinal) -> bool {
    a.succ() == *b || cofinal_index(b, a).is_some()
}

/// `a` itself below `ω^ω`; otherwise `ω^ω` followed by the trailing terms
/// with finite exponents.
pub fn omega_tail(a: &Ordinal) -> Ordinal {
    let infinite = a.terms.iter().take_while(|t| !t.exponent.is_finite()).count();
    if infinite == 0 {
        return a.clone();
    }
    let mut terms = vec![Term {
        exponent: Ordinal::omega(),
        coefficient: 1,
    }];
    terms.extend(a.terms[infinite..].iter().cloned());
    Ordinal { terms }
}

/// All ordinals of [`Ordinal::size`] at most `max_size`, ascending.
pub fn enumerate_ordinals(max_size: u64) -> Vec<Ordinal> {
    let exponents = if max_size == 0 {
        Vec::new()
    } else {
        let mut e = enumerate_ordinals(max_size - 1);
        e.reverse();
        e
    };
    let sizes: Vec<u64> = exponents.iter().map(Ordinal::size).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_sums(&exponents, &sizes, 0, max_size, &mut chosen, &mut out);
    out.sort();
    out
}

// Non-increasing sequences of exponents (indices into a descending list)
// whose summands fit in `budget`.
fn collect_sums(
    exponents: &[Ordinal],
    sizes: &[u64],
    start: usize,
    budget: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Ordinal>,
) {
    let mut terms: Vec<Term> = Vec::new();
    for &i in chosen.iter() {
        match terms.last_mut() {
            Some(t) if t.exponent == exponents[i] => t.coefficient += 1,
            _ => terms.push(Term {
                exponent: exponents[i].clone(),
                coefficient: 1,
            }),
        }
    }
    out.push(Ordinal { terms });
    for j in start..exponents.len() {
        if sizes[j] < budget {
            chosen.push(j);
            collect_sums(exponents, sizes, j, budget - 1 - sizes[j], chosen, out);
            chosen.pop();
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match t.exponent.to_nat() {
                Some(0) => write!(f, "{}", t.coefficient)?,
                Some(1) => f.write_str("w")?,
                _ => write!(f, "w^({})", t.exponent)?,
            }
            if t.coefficient > 1 && !t.exponent.is_zero() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = ParseOrdinalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            bytes: text.trim().as_bytes(),
            pos: 0,
        };
        let value = parser.ord()?;
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseOrdinalError {
        ParseOrdinalError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.bytes[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn ord(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        if self.peek() == Some(b'0') {
            let next = self.bytes.get(self.pos + 1).copied();
            if next.is_none() || next == Some(b')') {
                self.pos += 1;
                return Ok(Ordinal::zero());
            }
        }
        let mut value = self.term()?;
        while self.eat("+") {
            let term = self.term()?;
            value = value
                .checked_add(&term)
                .ok_or_else(|| self.error("coefficient overflow"))?;
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let (exponent, base) = if self.eat("w^(") {
            let e = self.ord()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            (e, 1)
        } else if self.eat("w") {
            (Ordinal::one(), 1)
        } else {
            (Ordinal::zero(), self.positive_nat()?)
        };
        let factor = if self.eat("*") { self.positive_nat()? } else { 1 };
        let coefficient = base
            .checked_mul(factor)
            .ok_or_else(|| self.error("coefficient overflow"))?;
        Ok(Ordinal::omega_pow_times(exponent, coefficient))
    }

    fn positive_nat(&mut self) -> Result<u64, ParseOrdinalError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap_or("");
        if digits.is_empty() {
            self.pos = start;
            return Err(self.error("expected `w`, `w^(` or a positive integer"));
        }
        if digits.len() > 1 && digits.starts_with('0') {
            self.pos = start;
            return Err(self.error("leading zero"));
        }
        match digits.parse::<u64>() {
            Ok(0) => {
                self.pos = start;
                Err(self.error("zero is only valid as a whole ordinal"))
            }
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                Err(self.error("integer out of range"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(text: &str) -> Ordinal {
        text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
    }

    fn n(k: u64) -> Ordinal {
        Ordinal::from_nat(k)
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(ord_cmp(&n(0), &n(0)), Ordering::Equal);
        assert_eq!(ord_cmp(&o("w"), &o("w+1")), Ordering::Less);
        assert_eq!(ord_cmp(&o("w^(w)"), &o("w^(2)*5")), Ordering::Greater);
        assert!(o("w*3") < o("w^(2)"));
        assert!(o("w^(2)+w*7") < o("w^(2)*2"));
    }

    #[test]
    fn addition_examples() {
        assert_eq!(ord_add(&n(0), &o("w")), o("w"));
        assert_eq!(ord_add(&o("w+1"), &o("w")), o("w*2"));
        assert_eq!(ord_add(&o("w^(w)"), &o("w^(w)")), o("w^(w)*2"));
        assert_eq!(ord_add(&o("w"), &n(3)), o("w+3"));
        assert_eq!(ord_add(&o("w^(2)+w+5"), &o("w*2+1")), o("w^(2)+w*3+1"));
    }

    #[test]
    fn basic_constructors() {
        assert_eq!(Ordinal::omega_pow(n(0)), n(1));
        assert!(!o("w+1").is_limit());
        assert!(o("w^(2)").is_limit());
        assert!(!n(0).is_limit());
        assert_eq!(n(4).to_nat(), Some(4));
        assert_eq!(o("w").to_nat(), None);
        assert_eq!(o("w").succ(), o("w+1"));
        assert_eq!(o("w+1").pred(), Some(o("w")));
        assert_eq!(o("w").pred(), None);
        assert!(Ordinal::from_terms(vec![(n(0), 1), (n(1), 1)]).is_none());
        assert!(Ordinal::from_terms(vec![(n(1), 0)]).is_none());
        assert_eq!(Ordinal::from_terms(vec![(n(1), 2), (n(0), 1)]), Some(o("w*2+1")));
    }

    #[test]
    fn tower_examples() {
        assert_eq!(omega_tower(0).unwrap(), n(1));
        assert_eq!(omega_tower(1).unwrap(), o("w"));
        assert_eq!(omega_tower(2).unwrap(), o("w^(w)"));
        assert_eq!(omega_tower(3).unwrap(), o("w^(w^(w))"));
        assert_eq!(omega_tower(13), Err(OrdinalError::TowerTooTall(13)));
        assert!(omega_tower(12).is_ok());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&n(0)), o("w"));
        assert_eq!(psi(&o("w+1")), o("w*2"));
        assert_eq!(psi(&o("w^(w)")), o("w^(w+1)"));
        assert_eq!(psi(&n(2)), o("w"));
        assert_eq!(psi(&o("w^(2)*3")), o("w^(3)"));
    }

    #[test]
    fn psi_closed_examples() {
        assert!(is_psi_closed(&n(0)));
        assert!(is_psi_closed(&o("w^(w)")));
        assert!(!is_psi_closed(&o("w^(w+1)")));
        assert!(is_psi_closed(&o("w^(w*2)")));
        assert!(!is_psi_closed(&n(1)));
        assert!(!is_psi_closed(&o("w")));
        assert!(!is_psi_closed(&o("w^(w)*2")));
    }

    #[test]
    fn psi_closed_matches_definition() {
        let sample = enumerate_ordinals(7);
        for alpha in sample.iter().filter(|a| a.size() <= 5) {
            let below: Vec<_> = sample.iter().filter(|b| *b < alpha).collect();
            let closed_on_sample = below.iter().all(|b| psi(b) < *alpha);
            if is_psi_closed(alpha) {
                assert!(closed_on_sample, "{alpha}");
            } else if !alpha.is_zero() {
                assert!(!closed_on_sample, "{alpha}: no witness");
            }
        }
    }

    #[test]
    fn cofinal_examples() {
        assert_eq!(cofinal(&o("w"), 3).unwrap(), n(4));
        assert_eq!(cofinal(&o("w^(w)"), 2).unwrap(), o("w^(3)"));
        assert_eq!(cofinal(&o("w^(2)*2"), 1).unwrap(), o("w^(2)+w*2"));
        assert_eq!(cofinal(&o("w+1"), 0), Err(OrdinalError::NotLimit(o("w+1"))));
        assert_eq!(cofinal(&n(0), 0), Err(OrdinalError::NotLimit(n(0))));
    }

    #[test]
    fn cofinal_index_examples() {
        assert_eq!(cofinal_index(&o("w"), &n(4)), Some(3));
        assert_eq!(cofinal_index(&o("w^(w)"), &o("w^(3)")), Some(2));
        assert_eq!(cofinal_index(&o("w*2"), &o("w")), None);
        assert_eq!(cofinal_index(&o("w+1"), &o("w")), None);
        assert_eq!(cofinal_index(&o("w^(w)"), &o("w^(3)*2")), None);
    }

    #[test]
    fn r_examples() {
        assert!(is_r(&n(0), &n(1)));
        assert!(is_r(&n(2), &o("w")));
        assert!(!is_r(&o("w"), &o("w*2")));
        assert!(is_r(&o("w+1"), &o("w*2")));
    }

    #[test]
    fn tail_examples() {
        assert_eq!(omega_tail(&n(5)), n(5));
        assert_eq!(omega_tail(&o("w^(w)*2+w^(3)")), o("w^(w)+w^(3)"));
        assert_eq!(omega_tail(&omega_tower(3).unwrap()), o("w^(w)"));
        assert_eq!(omega_tail(&omega_tower(4).unwrap()), o("w^(w)"));
        assert_eq!(omega_tail(&o("w^(w+1)+w^(w)+w*2+3")), o("w^(w)+w*2+3"));
    }

    #[test]
    fn parse_and_print() {
        let a = o("w^(w)+w*2+3");
        assert_eq!(a.to_string(), "w^(w)+w*2+3");
        assert_eq!(o("1+w"), o("w"));
        assert_eq!(psi(&n(0)).to_string(), "w");
        assert_eq!(o("w^(0)").to_string(), "1");
        assert_eq!(o("w^(1)*3").to_string(), "w*3");
        assert_eq!(o("0").to_string(), "0");
        assert_eq!(o("w^(0)+w^(0)"), n(2));
        assert_eq!(o("2*3"), n(6));
        assert_eq!(o("w^(2)*2+w^(2)").to_string(), "w^(2)*3");
        for bad in ["", "0+1", "w^(1", "w*0", "x", "w^()", "1+", "01", "w+0"] {
            assert!(bad.parse::<Ordinal>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn enumeration_counts_rooted_trees() {
        // ordinals of size <= s are rooted trees with <= s+1 nodes
        let counts: Vec<usize> = (0..=6).map(|s| enumerate_ordinals(s).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 17, 37, 85]);
        let all = enumerate_ordinals(6);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn fundamental_sequences_behave() {
        for b in enumerate_ordinals(7).iter().filter(|b| b.is_limit()) {
            for k in 0..5 {
                let x = cofinal(b, k).unwrap();
                let y = cofinal(b, k + 1).unwrap();
                assert!(x < y && y < *b, "{b}[{k}]");
                assert_eq!(cofinal_index(b, &x), Some(k));
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn addition_is_associative_and_monotone(i in 0usize..85, j in 0usize..85, k in 0usize..85) {
            let all = enumerate_ordinals(6);
            let (a, b, c) = (&all[i], &all[j], &all[k]);
            proptest::prop_assert_eq!(&(a + b) + c, a + &(b + c));
            proptest::prop_assert!(*a <= a + b);
            proptest::prop_assert!(*b <= a + b);
            proptest::prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a.clone());
        }
    }
}
