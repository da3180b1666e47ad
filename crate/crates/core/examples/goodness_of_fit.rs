//! χ² tests of sampled interaction contents and COE eigenphases against
//! their analytic densities.

use unistoch::ensembles::{alpha_gof, coe_gof};

fn main() -> unistoch::Result<()> {
    let a = alpha_gof(50_000, 3, 0)?;
    println!("alpha: χ² = {:.1} on {} dof, p = {:.4}", a.statistic, a.dof, a.p_value);
    let c = coe_gof(50_000, 3, 0)?;
    println!("COE:   χ² = {:.1} on {} dof, p = {:.4}", c.statistic, c.dof, c.p_value);
    Ok(())
}
