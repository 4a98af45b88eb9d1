// Fundamental sequences, the step relation R and omega-tails.

use std::error::Error;

use worms::ordinal::{cofinal, cofinal_index, is_r, omega_tail, omega_tower};
use worms::Ordinal;

pub fn run() -> Result<(), Box<dyn Error>> {
    for text in ["w", "w^(2)*2", "w^(w)", "w^(w^(w))"] {
        let b: Ordinal = text.parse()?;
        let seq: Vec<String> = (0..4).map(|n| cofinal(&b, n).map(|x| x.to_string())).collect::<Result<_, _>>()?;
        println!("{b}[0..4] = {}", seq.join(", "));
    }

    let b: Ordinal = "w^(2)*2".parse()?;
    let x: Ordinal = "w^(2)+w*3".parse()?;
    println!("{x} is {b}[{:?}]", cofinal_index(&b, &x));

    // An R-chain from 0 up to w^2.
    let chain = ["0", "1", "w", "w+1", "w*2", "w^(2)"];
    for step in chain.windows(2) {
        let (a, c): (Ordinal, Ordinal) = (step[0].parse()?, step[1].parse()?);
        println!("{a} R {c}: {}", is_r(&a, &c));
    }

    println!("tail(w^(w)*2+w^(3)) = {}", omega_tail(&"w^(w)*2+w^(3)".parse()?));
    println!("tail(omega tower 4) = {}", omega_tail(&omega_tower(4)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
