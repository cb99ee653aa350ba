//! Small dense complex eigenproblems, backed by nalgebra's Schur and SVD.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;
pub type CVector = DVector<Complex64>;

const SCHUR_EPS: f64 = 1e-15;
const SCHUR_MAX_ITER: usize = 10_000;

pub fn to_complex(m: &DMatrix<f64>) -> CMatrix {
    m.map(|x| Complex64::new(x, 0.0))
}

fn scale_of(m: &CMatrix) -> f64 {
    m.iter().map(|x| x.norm()).fold(0.0, f64::max).max(1.0)
}

/// All eigenvalues of a square complex matrix, with multiplicity.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    let n = m.nrows();
    if n == 0 {
        return Vec::new();
    }
    let schur = nalgebra::Schur::try_new(m.clone(), SCHUR_EPS, SCHUR_MAX_ITER)
        .expect("complex Schur iteration converges for small matrices");
    let (_, t) = schur.unpack();
    (0..n).map(|i| t[(i, i)]).collect()
}

/// Orthonormal basis of `{x : m x ≈ 0}`; singular values below
/// `rel_tol * max|m_ij|` count as zero.
pub fn null_space(m: &CMatrix, rel_tol: f64) -> Vec<CVector> {
    let n = m.ncols();
    let threshold = rel_tol * scale_of(m);
    // Pad to square so the SVD yields a full set of right singular vectors.
    let rows = m.nrows().max(n);
    let mut padded = CMatrix::zeros(rows, n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= threshold)
        .map(|(i, _)| v_t.row(i).transpose().map(|z| z.conj()))
        .collect()
}

/// Distinct eigenvalues (clustered within `cluster_tol`) and a basis of the
/// eigenspace for each.
pub fn eigen_decomposition(m: &CMatrix, cluster_tol: f64, null_tol: f64) -> Vec<(Complex64, Vec<CVector>)> {
    let n = m.nrows();
    let scale = scale_of(m);
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for lambda in eigenvalues(m) {
        match clusters.iter_mut().find(|(mu, _)| (*mu - lambda).norm() <= cluster_tol * scale) {
            Some((mu, count)) => {
                // Running mean keeps the representative centred in the cluster.
                *mu = (*mu * *count as f64 + lambda) / (*count as f64 + 1.0);
                *count += 1;
            }
            None => clusters.push((lambda, 1)),
        }
    }
    clusters
        .into_iter()
        .map(|(lambda, _)| {
            let shifted = m - CMatrix::identity(n, n) * lambda;
            (lambda, null_space(&shifted, null_tol))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rotation_has_conjugate_pair() {
        let m = CMatrix::from_row_slice(2, 2, &[c(0.0), c(-1.0), c(1.0), c(0.0)]);
        let mut ev = eigenvalues(&m);
        ev.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((ev[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((ev[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn repeated_eigenvalue_gets_full_eigenspace() {
        let m = CMatrix::from_diagonal(&CVector::from_vec(vec![c(2.0), c(2.0), c(5.0)]));
        let dec = eigen_decomposition(&m, 1e-9, 1e-9);
        assert_eq!(dec.len(), 2);
        let two = dec.iter().find(|(l, _)| (l - c(2.0)).norm() < 1e-9).unwrap();
        assert_eq!(two.1.len(), 2);
    }

    #[test]
    fn null_space_of_rank_one() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0), c(1.0), c(1.0), c(1.0)]);
        let ns = null_space(&m, 1e-10);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((v[0] + v[1]).norm() < 1e-12);
    }
}
