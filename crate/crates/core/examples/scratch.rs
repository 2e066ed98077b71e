use schubop_core::verify::{run_suite, SUITES};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let picked: Vec<&str> = if args.is_empty() {
        SUITES.to_vec()
    } else {
        args.iter().map(|s| s.as_str()).collect()
    };
    let mut bad = 0;
    for suite in picked {
        match run_suite(suite, None, 0) {
            Ok(report) => {
                println!("{}", report.summary());
                for f in report.failures.iter().take(40) {
                    println!("    case: {}", f.case);
                    let d = &f.details;
                    let short: String = d.chars().take(500).collect();
                    println!("    details: {short}");
                }
                if !report.passed() {
                    bad += 1;
                }
            }
            Err(e) => {
                println!("{suite}: ERROR {e}");
                bad += 1;
            }
        }
    }
    std::process::exit(bad);
}
