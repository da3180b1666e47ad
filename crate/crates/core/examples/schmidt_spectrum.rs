//! Operator Schmidt coefficients and entropies of a few structured gates.

use unistoch::gates::{build, GateId};
use unistoch::schmidt::{purity, renyi_entropy, schmidt_decomposition};

fn main() -> unistoch::Result<()> {
    for id in [GateId::Cnot, GateId::SqrtSwap, GateId::Swap(3), GateId::Fourier(3), GateId::GxorPlus(3)] {
        let u = build(&id)?;
        let dec = schmidt_decomposition(&u, u.dims())?;
        let s = &dec.spectrum;
        println!(
            "{:<10} rank {}  S1 {:.4}  S2 {:.4}  r {:.4}  Lambda {:.3?}",
            id.name(),
            s.rank(),
            renyi_entropy(s, 1.0)?,
            renyi_entropy(s, 2.0)?,
            purity(s).r,
            s.lambda_raw
        );
        let err = dec.reconstruct()?.distance(&u);
        assert!(err < 1e-10);
    }
    Ok(())
}
