// Encoding two linear orders on a finite set as a single word.

use std::error::Error;

use worms::gadget::{build_from_indices, decode_biorder, encode_biorder, slices, u_sequence, Biorder};

pub fn run() -> Result<(), Box<dyn Error>> {
    let m = Biorder::from_json(
        r#"{"elements":["a","b","c"],"l1":["a","b","c"],"l2":["c","a","b"]}"#,
    )?;
    let w = encode_biorder(&m);
    println!("{m}\n  encoded as {w}");
    for s in slices(&w)? {
        println!("  slice {s:<32} ◇3 -> {}", s.diamond(3));
    }
    let back = decode_biorder(&w)?;
    println!("  decoded: {back}  isomorphic: {}", back.is_isomorphic(&m));
    println!("  as JSON: {}", back.to_json());

    let a = build_from_indices(3, &[2, 3, 1])?;
    let us: Vec<String> = u_sequence(&a)?.iter().map(|u| format!("({u})")).collect();
    println!("u({a}) = {}", us.join(" "));

    for h in 1..=4 {
        let ok = Biorder::all_of_size(h)
            .iter()
            .all(|m| decode_biorder(&encode_biorder(m)).is_ok_and(|b| b.is_isomorphic(m)));
        println!("all {h}-element biorders survive the round trip: {ok}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
