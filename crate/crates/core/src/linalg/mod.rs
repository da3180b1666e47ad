//! Dense complex linear algebra with bipartite index bookkeeping.

pub mod decomp;
pub mod io;
pub mod matrix;
pub mod tensor;

pub use decomp::{hermitian_eigen, normal_eigenvalues, qr, singular_values, svd, HermitianEigen, Svd};
pub use io::{matrix_from_json, matrix_to_json, read_matrix, write_matrix, MatrixFile};
pub use matrix::ComplexMatrix;
pub use tensor::{fourier_matrix, partial_trace, reshuffle, tensor_product, unreshuffle, Subsystem};

/// Pauli matrices σ₀ = I, σx, σy, σz.
pub fn pauli(k: usize) -> ComplexMatrix {
    use num_complex::Complex64 as C;
    let z = C::new(0.0, 0.0);
    let o = C::new(1.0, 0.0);
    let i = C::new(0.0, 1.0);
    let data = match k {
        0 => vec![o, z, z, o],
        1 => vec![z, o, o, z],
        2 => vec![z, -i, i, z],
        3 => vec![o, z, z, -o],
        _ => panic!("Pauli index {k} out of range"),
    };
    ComplexMatrix::new(2, 2, data).expect("2x2")
}
