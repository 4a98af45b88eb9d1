// Cantor normal form arithmetic.

use std::error::Error;

use worms::ordinal::{is_psi_closed, omega_tower, psi};
use worms::Ordinal;

pub fn run() -> Result<(), Box<dyn Error>> {
    let a: Ordinal = "w^(w)+w*2+3".parse()?;
    let b: Ordinal = "w^(2)+1".parse()?;
    println!("{a} + {b} = {}", a.clone() + b.clone());
    println!("{b} + {a} = {}", b.clone() + a.clone());
    println!("1+w parses as {}", "1+w".parse::<Ordinal>()?);

    for text in ["0", "2", "w*2", "w^(2)*3", "w^(w)"] {
        let x: Ordinal = text.parse()?;
        println!("psi({x}) = {}   psi-closed: {}", psi(&x), is_psi_closed(&x));
    }

    for m in 0..=4 {
        println!("omega tower {m} = {}", omega_tower(m)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
