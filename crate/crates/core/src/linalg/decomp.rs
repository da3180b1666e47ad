//! Jacobi-type decompositions for small dense complex matrices.
//!
//! Matrix sizes in this crate stay below a few dozen, where cyclic Jacobi
//! sweeps are accurate to working precision and give reproducible results
//! independent of any external LAPACK.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ONE, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 80;

/// Singular value decomposition `X = U diag(s) V†`.
///
/// `u` is `rows x k` and `v` is `cols x k` with `k = min(rows, cols)`; both
/// have orthonormal columns, including the columns belonging to zero
/// singular values.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

/// Eigen-decomposition of a Hermitian matrix, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    /// Eigenvectors stored as columns.
    pub eigenvectors: ComplexMatrix,
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(x: &ComplexMatrix) -> Result<Svd> {
    if x.rows() < x.cols() {
        let t = svd(&x.adjoint())?;
        return Ok(Svd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        });
    }
    let (m, n) = (x.rows(), x.cols());
    // Work on columns stored contiguously.
    let mut cols: Vec<Vec<Complex64>> = (0..n).map(|j| x.column(j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { ONE } else { ZERO }).collect())
        .collect();

    // Pairs whose overlap is negligible on the scale of the whole matrix are
    // left alone; otherwise columns that are numerically zero never settle.
    let tiny = f64::EPSILON * f64::EPSILON * x.frobenius_norm().powi(2);
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = cols[p].iter().zip(&cols[q]).map(|(a, b)| a.conj() * b).sum();
                let g = gamma.norm();
                if g <= tiny || g <= m as f64 * f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_pair(&mut cols, p, q, phase, c, s);
                rotate_pair(&mut v, p, q, phase, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Convergence("Jacobi SVD sweeps exhausted".into()));
    }

    let mut order: Vec<(f64, usize)> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| (c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt(), j))
        .collect();
    order.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));

    let scale = order.first().map_or(0.0, |o| o.0);
    let cutoff = scale * (m.max(n) as f64) * f64::EPSILON;
    let mut u = ComplexMatrix::zeros(m, n);
    let mut vm = ComplexMatrix::zeros(n, n);
    let mut singular_values = Vec::with_capacity(n);
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for (k, &(s, j)) in order.iter().enumerate() {
        vm.set_column(k, &v[j]);
        if s > cutoff {
            singular_values.push(s);
            let col: Vec<Complex64> = cols[j].iter().map(|z| z / s).collect();
            basis.push(col);
        } else {
            singular_values.push(0.0);
            basis.push(complete_orthonormal(&basis, m));
        }
        u.set_column(k, &basis[k]);
    }
    Ok(Svd {
        u,
        singular_values,
        v: vm,
    })
}

/// Singular values only, descending.
pub fn singular_values(x: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(svd(x)?.singular_values)
}

// Applies the unitary [[c, s], [-s e^{-iφ}, c e^{-iφ}]] to columns p and q.
fn rotate_pair(cols: &mut [Vec<Complex64>], p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let (left, right) = cols.split_at_mut(q);
    let cp = &mut left[p];
    let cq = &mut right[0];
    let ph = phase.conj();
    for (a, b) in cp.iter_mut().zip(cq.iter_mut()) {
        let bq = *b * ph;
        let na = a.scale(c) - bq.scale(s);
        let nb = a.scale(s) + bq.scale(c);
        *a = na;
        *b = nb;
    }
}

/// Returns a unit vector orthogonal to every vector in `basis`.
fn complete_orthonormal(basis: &[Vec<Complex64>], m: usize) -> Vec<Complex64> {
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for e in 0..m {
        let mut w: Vec<Complex64> = (0..m).map(|i| if i == e { ONE } else { ZERO }).collect();
        for _ in 0..2 {
            for b in basis {
                let proj: Complex64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= proj * bi;
                }
            }
        }
        let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if best.as_ref().is_none_or(|(n, _)| norm > *n) {
            best = Some((norm, w));
        }
        if norm > 0.5 {
            break;
        }
    }
    let (norm, w) = best.expect("basis completion needs m >= 1");
    w.into_iter().map(|z| z / norm).collect()
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    if !h.is_square() {
        return Err(Error::Dimension("eigensolve of a non-square matrix".into()));
    }
    let n = h.rows();
    let scale = h.frobenius_norm().max(f64::MIN_POSITIVE);
    if h.hermiticity_residual() > 1e-8 * scale.max(1.0) {
        return Err(Error::Domain("matrix is not Hermitian".into()));
    }
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] = Complex64::new(a[(i, i)].re, 0.0);
    }
    let mut vecs = ComplexMatrix::identity(n);

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let g = a[(p, q)];
                let gn = g.norm();
                if gn <= 1e-300 {
                    continue;
                }
                let phase = g / gn;
                let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                let tau = (aqq - app) / (2.0 * gn);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                // J = [[c, s], [-s e^{-iφ}, c e^{-iφ}]]; A <- J† A J, V <- V J.
                let ph = phase.conj();
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp.scale(c) - (akq * ph).scale(s);
                    a[(k, q)] = akp.scale(s) + (akq * ph).scale(c);
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk.scale(c) - (aqk * phase).scale(s);
                    a[(q, k)] = apk.scale(s) + (aqk * phase).scale(c);
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let vkp = vecs[(k, p)];
                    let vkq = vecs[(k, q)];
                    vecs[(k, p)] = vkp.scale(c) - (vkq * ph).scale(s);
                    vecs[(k, q)] = vkp.scale(s) + (vkq * ph).scale(c);
                }
            }
        }
    }
    if !converged {
        return Err(Error::Convergence("Jacobi eigensolver sweeps exhausted".into()));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].re.total_cmp(&a[(x, x)].re).then(x.cmp(&y)));
    let eigenvalues = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        eigenvectors.set_column(dst, &vecs.column(src));
    }
    Ok(HermitianEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// Householder QR factorization `X = Q R` of a square matrix.
pub fn qr(x: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !x.is_square() {
        return Err(Error::Dimension("QR of a non-square matrix".into()));
    }
    let n = x.rows();
    let mut r = x.clone();
    let mut q = ComplexMatrix::identity(n);
    for k in 0..n.saturating_sub(1) {
        let norm: f64 = (k..n).map(|i| r[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { ONE };
        let alpha = -phase * norm;
        let mut v: Vec<Complex64> = (k..n).map(|i| r[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        // R <- (I - 2 v v† / v†v) R
        for j in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vi)| vi.conj() * r[(k + t, j)]).sum();
            let f = dot * (2.0 / vnorm2);
            for (t, vi) in v.iter().enumerate() {
                r[(k + t, j)] -= f * vi;
            }
        }
        // Q <- Q (I - 2 v v† / v†v)
        for i in 0..n {
            let dot: Complex64 = v.iter().enumerate().map(|(t, vi)| q[(i, k + t)] * vi).sum();
            let f = dot * (2.0 / vnorm2);
            for (t, vi) in v.iter().enumerate() {
                q[(i, k + t)] -= f * vi.conj();
            }
        }
        for i in k + 1..n {
            r[(i, k)] = ZERO;
        }
    }
    Ok((q, r))
}

/// Eigenvalues of a normal matrix (unitary, Hermitian, ...).
///
/// The Hermitian and anti-Hermitian parts of a normal matrix commute, so a
/// generic real combination of them shares the eigenvectors of the input.
pub fn normal_eigenvalues(x: &ComplexMatrix) -> Result<Vec<Complex64>> {
    if !x.is_square() {
        return Err(Error::Dimension("eigenvalues of a non-square matrix".into()));
    }
    let xa = x.adjoint();
    let herm = (x + &xa).scale_real(0.5);
    let anti = (x - &xa).scale(Complex64::new(0.0, -0.5));
    let scale = x.frobenius_norm().max(1.0);
    for &mix in &[0.754_877_666_246_692_7, 0.381_966_011_250_105_1, 1.324_717_957_244_746] {
        let h = &herm + &anti.scale_real(mix);
        let eig = hermitian_eigen(&h)?;
        let vecs = &eig.eigenvectors;
        let xv = x * vecs;
        let mut values = Vec::with_capacity(x.rows());
        let mut residual: f64 = 0.0;
        for k in 0..x.rows() {
            let vk = vecs.column(k);
            let xk = xv.column(k);
            let lambda: Complex64 = vk.iter().zip(&xk).map(|(a, b)| a.conj() * b).sum();
            let r: f64 = xk
                .iter()
                .zip(&vk)
                .map(|(a, b)| (a - lambda * b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            residual = residual.max(r);
            values.push(lambda);
        }
        if residual <= 1e-9 * scale {
            return Ok(values);
        }
    }
    Err(Error::Convergence(
        "normal eigensolver: eigenvector residual too large (input not normal?)".into(),
    ))
}
