//! Mean Rényi entropies of CUE(N²) gates next to 2 ln N − c_q.

use unistoch::ensembles::{entropy_offset, mc_mean_entropies, random_vector_mean_entropy};

fn main() -> unistoch::Result<()> {
    let qs = [1.0, 2.0, 4.0];
    println!("{:>2} {:>3} {:>8} {:>8} {:>8}", "N", "q", "mean", "2lnN-c", "vector");
    for n in 2..=5 {
        let est = mc_mean_entropies(n, &qs, 4_000, 11, 0)?;
        for (q, e) in qs.iter().zip(est) {
            let asym = 2.0 * (n as f64).ln() - entropy_offset(*q).unwrap();
            println!("{n:>2} {q:>3} {:>8.4} {asym:>8.4} {:>8.4}", e.mean, random_vector_mean_entropy(n));
        }
    }
    Ok(())
}
