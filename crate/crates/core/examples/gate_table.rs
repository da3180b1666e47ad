//! Invariants of the reference two-qubit gates, with flagged cells.

use unistoch::gates::table1;

fn main() -> unistoch::Result<()> {
    println!("{:<11} {:<28} {:<30} {:>4} {:<24} {}", "gate", "alpha", "Lambda", "rank", "eta", "PE");
    for r in table1()? {
        println!(
            "{:<11} {:<28} {:<30} {:>4} {:<24} {}{}",
            r.gate,
            format!("{:.4?}", r.alpha),
            format!("{:.4?}", r.lambda),
            r.schmidt_rank,
            format!("{:.4?}", r.eta),
            r.pe_class,
            if r.flags.is_empty() { String::new() } else { format!("  differs from print: {}", r.flags.join(", ")) }
        );
    }
    Ok(())
}
