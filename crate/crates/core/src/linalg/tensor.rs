use std::f64::consts::PI;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::config::Tolerances;
use crate::error::{Error, Result};

/// Which factor of a bipartite space to trace out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Kronecker product `A ⊗ B`, refused above the configured dimension cap.
pub fn tensor_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    tensor_product_capped(a, b, Tolerances::DEFAULT.dimension_cap)
}

pub fn tensor_product_capped(a: &ComplexMatrix, b: &ComplexMatrix, cap: usize) -> Result<ComplexMatrix> {
    let rows = a.rows().checked_mul(b.rows());
    let cols = a.cols().checked_mul(b.cols());
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) if r <= cap && c <= cap => (r, c),
        _ => {
            return Err(Error::Dimension(format!(
                "tensor product of {}x{} and {}x{} exceeds the dimension cap {cap}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )))
        }
    };
    let (rb, cb) = (b.rows(), b.cols());
    let out = ComplexMatrix::from_fn(rows, cols, |r, c| a[(r / rb, c / cb)] * b[(r % rb, c % cb)]);
    if a.is_square() && b.is_square() {
        out.with_dims(a.rows(), b.rows())
    } else {
        Ok(out)
    }
}

fn check_square_bipartite(x: &ComplexMatrix, dims: (usize, usize)) -> Result<()> {
    let (da, db) = dims;
    if !x.is_square() || da == 0 || db == 0 || da * db != x.rows() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix is not a square operator on a {da}x{db} space",
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

/// Partial trace over subsystem `which` of an operator on `C^dA ⊗ C^dB`.
pub fn partial_trace(x: &ComplexMatrix, dims: (usize, usize), which: Subsystem) -> Result<ComplexMatrix> {
    check_square_bipartite(x, dims)?;
    let (da, db) = dims;
    Ok(match which {
        Subsystem::B => ComplexMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|k| x[(i * db + k, j * db + k)]).sum()
        }),
        Subsystem::A => ComplexMatrix::from_fn(db, db, |k, l| {
            (0..da).map(|i| x[(i * db + k, i * db + l)]).sum()
        }),
    })
}

/// Reshuffling `X^R[(m,n),(μ,ν)] = X[(m,μ),(n,ν)]`.
///
/// Roman indices belong to factor A, Greek ones to factor B. The result has
/// shape `dA² x dB²`: row `(m,n)` collects the `(m,n)` block of `X`
/// flattened row after row.
pub fn reshuffle(x: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    check_square_bipartite(x, dims)?;
    let (da, db) = dims;
    Ok(ComplexMatrix::from_fn(da * da, db * db, |row, col| {
        let (m, n) = (row / da, row % da);
        let (mu, nu) = (col / db, col % db);
        x[(m * db + mu, n * db + nu)]
    }))
}

/// Inverse of [`reshuffle`]: maps a `dA² x dB²` matrix back to an operator
/// on `C^dA ⊗ C^dB`. For `dA == dB` this is reshuffling itself.
pub fn unreshuffle(y: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    let (da, db) = dims;
    if y.rows() != da * da || y.cols() != db * db {
        return Err(Error::Dimension(format!(
            "{}x{} is not a reshuffled {da}x{db} operator",
            y.rows(),
            y.cols()
        )));
    }
    let d = da * db;
    ComplexMatrix::from_fn(d, d, |r, c| {
        let (m, mu) = (r / db, r % db);
        let (n, nu) = (c / db, c % db);
        y[(m * da + n, mu * db + nu)]
    })
    .with_dims(da, db)
}

/// Unitary Fourier matrix `F[k,l] = exp(2πi kl/d)/√d`.
pub fn fourier_matrix(d: usize) -> Result<ComplexMatrix> {
    if d == 0 {
        return Err(Error::Domain("Fourier matrix of size 0".into()));
    }
    let norm = 1.0 / (d as f64).sqrt();
    let m = ComplexMatrix::from_fn(d, d, |k, l| {
        // Reduce kl mod d before forming the angle to keep it small.
        let e = ((k * l) % d) as f64;
        Complex64::from_polar(norm, 2.0 * PI * e / d as f64)
    });
    let root = (d as f64).sqrt().round() as usize;
    if root * root == d {
        m.with_dims(root, root)
    } else {
        Ok(m)
    }
}

/// Number of entries of a size-`N²` matrix left in place by reshuffling.
pub fn reshuffle_fixed_positions(n: usize) -> usize {
    let x = ComplexMatrix::from_fn(n * n, n * n, |i, j| Complex64::new((i * n * n + j) as f64, 0.0));
    let r = reshuffle(&x, (n, n)).expect("square bipartite");
    x.data().iter().zip(r.data()).filter(|(a, b)| a == b).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::decomp::singular_values;
    use crate::linalg::matrix::{ONE, ZERO};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn lcg_matrix(n: usize, seed: u64) -> ComplexMatrix {
        let mut s = seed;
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        ComplexMatrix::from_fn(n, n, |_, _| c(next(), next()))
    }

    // Column-reshaping variant X^{R'}[(m,μ),(n,ν)] = X[(ν,μ),(n,m)], kept
    // here only to show its singular values agree with X^R.
    fn reshuffle_columns(x: &ComplexMatrix, n: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(n * n, n * n, |row, col| {
            let (m, mu) = (row / n, row % n);
            let (nn, nu) = (col / n, col % n);
            x[(nu * n + mu, nn * n + m)]
        })
    }

    #[test]
    fn identity_and_pauli_products() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(tensor_product(&i2, &i2).unwrap(), ComplexMatrix::identity(4).with_dims(2, 2).unwrap());
        let x = ComplexMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let xx = tensor_product(&x, &x).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let expected = if i + j == 3 { ONE } else { ZERO };
                assert_eq!(xx[(i, j)], expected);
            }
        }
    }

    #[test]
    fn frobenius_norm_is_multiplicative() {
        let a = lcg_matrix(3, 1);
        let b = lcg_matrix(3, 2);
        let ab = tensor_product(&a, &b).unwrap();
        let expected = a.frobenius_norm() * b.frobenius_norm();
        assert!((ab.frobenius_norm() - expected).abs() < 1e-12 * expected);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let a = ComplexMatrix::identity(80);
        assert!(tensor_product(&a, &a).is_err());
        assert!(tensor_product_capped(&a, &ComplexMatrix::identity(2), 4096).is_ok());
    }

    #[test]
    fn partial_trace_of_product_state() {
        let rho = lcg_matrix(2, 3);
        let sigma = lcg_matrix(2, 4);
        let prod = tensor_product(&rho, &sigma).unwrap();
        let tb = partial_trace(&prod, (2, 2), Subsystem::B).unwrap();
        assert!(tb.approx_eq(&rho.scale(sigma.trace()), 1e-14));
        let ta = partial_trace(&prod, (2, 2), Subsystem::A).unwrap();
        assert!(ta.approx_eq(&sigma.scale(rho.trace()), 1e-14));
    }

    #[test]
    fn partial_trace_of_bell_projector() {
        // 2|ψ+⟩⟨ψ+| with |ψ+⟩ = (|00⟩ + |11⟩)/√2
        let mut p = ComplexMatrix::zeros(4, 4);
        for &i in &[0, 3] {
            for &j in &[0, 3] {
                p[(i, j)] = ONE;
            }
        }
        let t = partial_trace(&p, (2, 2), Subsystem::B).unwrap();
        assert!(t.approx_eq(&ComplexMatrix::identity(2), 1e-15));
    }

    #[test]
    fn partial_trace_of_swap_by_direct_summation() {
        let swap = ComplexMatrix::from_real(
            4,
            4,
            &[1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0., 0., 0., 0., 0., 1.],
        )
        .unwrap();
        // Tr_A(SWAP)_{kl} = Σ_i ⟨i,k|SWAP|i,l⟩
        let mut oracle = ComplexMatrix::zeros(2, 2);
        for k in 0..2 {
            for l in 0..2 {
                for i in 0..2 {
                    // SWAP|i,l⟩ = |l,i⟩, so ⟨i,k|l,i⟩ = δ_{il} δ_{ki}
                    if i == l && k == i {
                        oracle[(k, l)] += ONE;
                    }
                }
            }
        }
        let t = partial_trace(&swap, (2, 2), Subsystem::A).unwrap();
        assert_eq!(t, oracle);
        assert!(t.approx_eq(&ComplexMatrix::identity(2), 0.0));
    }

    #[test]
    fn partial_trace_rejects_bad_dims() {
        assert!(partial_trace(&ComplexMatrix::identity(6), (2, 2), Subsystem::A).is_err());
    }

    #[test]
    fn reshuffle_layout_for_two_qubits() {
        // Entries X_{ij} encoded as 10*i + j with 1-based indices.
        let x = ComplexMatrix::from_fn(4, 4, |i, j| c((10 * (i + 1) + j + 1) as f64, 0.0));
        let r = reshuffle(&x, (2, 2)).unwrap();
        let expected = [
            [11, 12, 21, 22],
            [13, 14, 23, 24],
            [31, 32, 41, 42],
            [33, 34, 43, 44],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r[(i, j)].re as i32, expected[i][j]);
            }
        }
    }

    #[test]
    fn reshuffle_is_an_involutive_isometry() {
        for seed in 0..100 {
            let x = lcg_matrix(4, seed);
            let r = reshuffle(&x, (2, 2)).unwrap();
            let rr = reshuffle(&r, (2, 2)).unwrap();
            assert!(rr.approx_eq(&x, 1e-12));
            assert!((r.frobenius_norm() - x.frobenius_norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn rectangular_reshuffle_round_trips() {
        let x = lcg_matrix(6, 5);
        let r = reshuffle(&x, (2, 3)).unwrap();
        assert_eq!((r.rows(), r.cols()), (4, 9));
        assert!(unreshuffle(&r, (2, 3)).unwrap().approx_eq(&x, 1e-15));
    }

    #[test]
    fn column_variant_has_equal_singular_values() {
        for seed in 0..10 {
            let x = lcg_matrix(9, seed);
            let a = singular_values(&reshuffle(&x, (3, 3)).unwrap()).unwrap();
            let b = singular_values(&reshuffle_columns(&x, 3)).unwrap();
            for (p, q) in a.iter().zip(&b) {
                assert!((p - q).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exactly_n_cubed_entries_stay_in_place() {
        assert_eq!(reshuffle_fixed_positions(2), 8);
        assert_eq!(reshuffle_fixed_positions(3), 27);
    }

    #[test]
    fn fourier_is_unitary_and_reshuffles_to_unitary() {
        let f = fourier_matrix(4).unwrap();
        assert!(f.is_unitary(1e-12));
        for s in singular_values(&reshuffle(&f, (2, 2)).unwrap()).unwrap() {
            assert!((s - 1.0).abs() < 1e-12);
        }
        assert!(fourier_matrix(0).is_err());
        assert!(fourier_matrix(7).unwrap().is_unitary(1e-12));
    }
}
