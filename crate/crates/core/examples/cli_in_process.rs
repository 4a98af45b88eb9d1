// Driving the command line without spawning a process.

use std::error::Error;

pub fn run() -> Result<(), Box<dyn Error>> {
    let commands: [&[&str]; 5] = [
        &["cmp", "1 1 2", "2"],
        &["nf", "2 0 1 0 2"],
        &["ord", "2 1 2"],
        &["--format", "json", "cofinal", "w^(w)", "2"],
        &["decode", "3 2 1 3 0 3 2"],
    ];
    for args in commands {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = worms::cli::run(std::iter::once("worms").chain(args.iter().copied()), &mut out, &mut err);
        print!("worms {} -> [{code}] {}", args.join(" "), String::from_utf8(out)?);
        if code != 0 {
            return Err(String::from_utf8(err)?.into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
