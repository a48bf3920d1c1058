use kideal::budget::Budget;
use kideal::corpus::default_corpus;
use kideal::suite::{run_all, total_findings};

fn main() {
    let corpus = default_corpus();
    let budget = Budget::default();
    let start = std::time::Instant::now();
    match run_all(&corpus, &budget) {
        Ok(reports) => {
            for r in &reports {
                println!(
                    "{:42} checked={:4} passes={:4} findings={} vacuous={}",
                    r.suite,
                    r.instances_checked,
                    r.passes,
                    r.findings.len(),
                    r.vacuous
                );
                for f in r.findings.iter().take(3) {
                    println!("    !! {}: {}", f.instance, f.witness);
                }
            }
            println!("total findings: {}", total_findings(&reports));
        }
        Err(e) => println!("error: {e}"),
    }
    println!("elapsed: {:?}, budget used: {}", start.elapsed(), budget.used());
}
