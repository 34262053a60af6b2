//! Affine extension by the negative highest root, and Lorentzian overextension.

use num_rational::Ratio;
use thiserror::Error;

use crate::classify::{classify_indecomposable, ClassifyError, Kind};
use crate::gcm::CartanMatrix;
use crate::symmetrize::symmetrizer;
use crate::weyl::{highest_root, WeylError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("input is not of finite type (kind: {0})")]
    NotFinite(Kind),
    #[error("input is not of affine type (kind: {0})")]
    NotAffine(Kind),
    #[error("zero vertex {index} out of range for rank {rank}", index = .index + 1)]
    VertexOutOfRange { index: usize, rank: usize },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("extension pairing {value} at ({},{}) is not an integer", .i + 1, .j + 1)]
    NonIntegral { i: usize, j: usize, value: Ratio<i64> },
}

/// Appends `alpha_0 = -delta` as the last vertex of a finite-type matrix.
pub fn extend_finite_to_affine(a: &CartanMatrix) -> Result<CartanMatrix, ExtendError> {
    let kind = classify_indecomposable(a)?.kind;
    if kind != Kind::Finite {
        return Err(ExtendError::NotFinite(kind));
    }
    let n = a.rank();
    let delta = highest_root(a)?;
    let d = symmetrizer(a).expect("finite type is symmetrizable").into_vec();
    let k = delta.coords();
    // (delta | alpha_j) = sum_i k_i d_i a[i][j]
    let pair: Vec<i64> = (0..n)
        .map(|j| (0..n).map(|i| k[i] * d[i] * a.get(i, j)).sum())
        .collect();
    let norm: i64 = (0..n).map(|j| k[j] * pair[j]).sum();

    let m = n + 1;
    let mut e = vec![0i64; m * m];
    for i in 0..n {
        for j in 0..n {
            e[i * m + j] = a.get(i, j);
        }
    }
    e[n * m + n] = 2;
    let integral = |i: usize, j: usize, v: Ratio<i64>| {
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(ExtendError::NonIntegral { i, j, value: v })
        }
    };
    for j in 0..n {
        // a[0][j] = 2 (alpha_0|alpha_j) / (alpha_0|alpha_0)
        e[n * m + j] = integral(n, j, Ratio::new(-2 * pair[j], norm))?;
        // a[j][0] = 2 (alpha_j|alpha_0) / (alpha_j|alpha_j), with (alpha_j|alpha_j) = 2 d_j
        e[j * m + n] = integral(j, n, Ratio::new(-pair[j], d[j]))?;
    }
    let ext = CartanMatrix::from_flat(m, e)
        .expect("extension of a finite Cartan matrix is a generalized Cartan matrix");
    debug_assert_eq!(classify_indecomposable(&ext).map(|t| t.kind), Ok(Kind::Affine));
    Ok(ext)
}

/// Appends one vertex joined to `zero_vertex` by a single edge.
pub fn overextend_affine(a: &CartanMatrix, zero_vertex: usize) -> Result<CartanMatrix, ExtendError> {
    let n = a.rank();
    if zero_vertex >= n {
        return Err(ExtendError::VertexOutOfRange {
            index: zero_vertex,
            rank: n,
        });
    }
    let kind = classify_indecomposable(a)?.kind;
    if kind != Kind::Affine {
        return Err(ExtendError::NotAffine(kind));
    }
    let m = n + 1;
    let mut e = vec![0i64; m * m];
    for i in 0..n {
        for j in 0..n {
            e[i * m + j] = a.get(i, j);
        }
    }
    e[n * m + n] = 2;
    e[n * m + zero_vertex] = -1;
    e[zero_vertex * m + n] = -1;
    Ok(CartanMatrix::from_flat(m, e).expect("single edge keeps the axioms"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_hyperbolic;
    use crate::standard;

    fn m(rows: &[&[i64]]) -> CartanMatrix {
        CartanMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn a1_and_a2() {
        assert_eq!(
            extend_finite_to_affine(&standard::a(1)).unwrap(),
            m(&[&[2, -2], &[-2, 2]])
        );
        let a2 = extend_finite_to_affine(&standard::a(2)).unwrap();
        assert_eq!(a2, m(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]));
    }

    #[test]
    fn e8_extends_at_long_tail() {
        let e9 = extend_finite_to_affine(&standard::e(8)).unwrap();
        assert_eq!(e9, standard::e_series(9));
    }

    #[test]
    fn extensions_of_fixtures_are_affine() {
        for (name, a) in standard::finite_fixtures(8) {
            let ext = extend_finite_to_affine(&a).unwrap();
            assert_eq!(classify_indecomposable(&ext).unwrap().kind, Kind::Affine, "{name}");
        }
    }

    #[test]
    fn overextensions() {
        let e10 = overextend_affine(&standard::e_series(9), 8).unwrap();
        assert_eq!(e10, standard::e10());
        assert!(is_hyperbolic(&e10).unwrap());

        let h = overextend_affine(&m(&[&[2, -2], &[-2, 2]]), 1).unwrap();
        assert_eq!(h, m(&[&[2, -2, 0], &[-2, 2, -1], &[0, -1, 2]]));
        assert!(is_hyperbolic(&h).unwrap());

        for zero in 0..2 {
            let t = overextend_affine(&m(&[&[2, -1], &[-4, 2]]), zero).unwrap();
            assert!(is_hyperbolic(&t).unwrap());
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            extend_finite_to_affine(&m(&[&[2, -2], &[-2, 2]])).unwrap_err(),
            ExtendError::NotFinite(Kind::Affine)
        );
        assert_eq!(
            overextend_affine(&standard::a(2), 0).unwrap_err(),
            ExtendError::NotAffine(Kind::Finite)
        );
        assert!(matches!(
            overextend_affine(&m(&[&[2, -2], &[-2, 2]]), 2),
            Err(ExtendError::VertexOutOfRange { .. })
        ));
    }
}
