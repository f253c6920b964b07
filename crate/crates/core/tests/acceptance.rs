//! One line per reproduction criterion; exits nonzero if any fails.

use chordgirth::verify;

fn main() {
    let filter: Option<usize> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for criterion in verify::criteria() {
        if filter.is_some_and(|id| id != criterion.id) {
            continue;
        }
        let report = verify::run(&criterion);
        println!("{report}");
        failed += usize::from(!report.passed);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
