//! JSON matrix files: `{"rows":R,"cols":C,"dims":[dA,dB],"data":[[re,im],...]}`.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Serialized form of a [`ComplexMatrix`]; `data` is row-major.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 2]>,
    pub data: Vec<[f64; 2]>,
}

impl From<&ComplexMatrix> for MatrixFile {
    fn from(m: &ComplexMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            dims: m.dims().map(|(a, b)| [a, b]),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl TryFrom<MatrixFile> for ComplexMatrix {
    type Error = Error;

    fn try_from(f: MatrixFile) -> Result<Self> {
        if f.data.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Parse("matrix contains NaN or infinite entries".into()));
        }
        if f.data.len() != f.rows * f.cols {
            return Err(Error::Parse(format!(
                "expected {} entries for a {}x{} matrix, found {}",
                f.rows * f.cols,
                f.rows,
                f.cols,
                f.data.len()
            )));
        }
        let m = ComplexMatrix::new(
            f.rows,
            f.cols,
            f.data.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        match f.dims {
            Some([a, b]) => m.with_dims(a, b).map_err(|e| Error::Parse(e.to_string())),
            None => Ok(m),
        }
    }
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    // serde_json rejects the bare NaN/Infinity tokens, which covers the
    // non-finite case for hand-written files.
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.try_into()
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixFile::from(m)).expect("matrix serialization cannot fail")
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    matrix_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_matrix(path: impl AsRef<Path>, m: &ComplexMatrix) -> Result<()> {
    std::fs::write(path, matrix_to_json(m))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_entries_and_dims() {
        let m = ComplexMatrix::from_fn(4, 4, |i, j| Complex64::new(i as f64 * 0.1, j as f64 - 1.5))
            .with_dims(2, 2)
            .unwrap();
        let back = matrix_from_json(&matrix_to_json(&m)).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.dims(), Some((2, 2)));
    }

    #[test]
    fn parser_rejects_bad_files() {
        assert!(matrix_from_json(r#"{"rows":1,"cols":1,"data":[[NaN,0]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":2,"cols":2,"data":[[1,0]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":2,"cols":2,"dims":[3,1],"data":[[1,0],[0,0],[0,0],[1,0]]}"#).is_err());
        assert!(matrix_from_json("not json").is_err());
        let big = format!(r#"{{"rows":1,"cols":1,"data":[[{},0]]}}"#, "1e999");
        assert!(matrix_from_json(&big).is_err());
    }

    #[test]
    fn dims_field_is_optional() {
        let m = matrix_from_json(r#"{"rows":1,"cols":2,"data":[[1,0],[0,-1]]}"#).unwrap();
        assert_eq!(m.dims(), None);
        assert_eq!(m[(0, 1)], Complex64::new(0.0, -1.0));
    }
}
