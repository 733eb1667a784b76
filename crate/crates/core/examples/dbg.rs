use quiver_spectra::census::*;
fn main() {
    let r = conjecture_a_scan(4).unwrap();
    for c in r.counterexamples.iter().take(4) {
        println!("{:?}", c);
    }
    println!("total counterexamples listed: {}", r.counterexamples.len());
}
