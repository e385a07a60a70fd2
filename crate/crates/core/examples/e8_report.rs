//! The full E8 pipeline as a JSON record.

use peterson::cli::to_canonical_json;
use peterson::report::{build_report, ReportOptions};
use peterson::rootsys::RootSystem;

fn main() {
    let label = std::env::args().nth(1).unwrap_or_else(|| "E8".into());
    let rs = RootSystem::new(label.parse().unwrap());
    let options = ReportOptions {
        seed_word: None,
        timings: true,
    };
    let record = build_report(&rs, &options).unwrap();
    print!("{}", to_canonical_json(&record));
}
