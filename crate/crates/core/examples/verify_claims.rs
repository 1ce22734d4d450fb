//! Runs every built-in claim check at its default scale.

use treedisc::verify::{verify_claim, Claim, VerifyParams};

fn main() {
    for c in Claim::ALL {
        let start = std::time::Instant::now();
        let r = verify_claim(c, &VerifyParams::default());
        for l in r.lines.iter().take(6) {
            println!("  {l}");
        }
        println!("{c}: {} {}/{} in {:.2?}", if r.pass { "PASS" } else { "FAIL" }, r.passing, r.cases, start.elapsed());
    }
}
