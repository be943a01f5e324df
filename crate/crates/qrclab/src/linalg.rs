//! Thin wrappers around `matrixmultiply`'s complex gemm for the hot loops.
//!
//! nalgebra's own product kernel for `Complex64` is a generic triple loop;
//! `zgemm` is ~5x faster on the 32/64-dimensional blocks the protocol loop
//! lives in. All matrices here are nalgebra column-major storage.

use matrixmultiply::{zgemm, CGemmOption};
use nalgebra::DMatrix;
use num_complex::Complex64;

const ONE: [f64; 2] = [1.0, 0.0];
const ZERO: [f64; 2] = [0.0, 0.0];

#[inline]
fn ptr(m: &DMatrix<Complex64>) -> *const [f64; 2] {
    m.as_slice().as_ptr() as *const [f64; 2]
}

#[inline]
fn ptr_mut(m: &mut DMatrix<Complex64>) -> *mut [f64; 2] {
    m.as_mut_slice().as_mut_ptr() as *mut [f64; 2]
}

/// `c = a * b`.
pub(crate) fn gemm(c: &mut DMatrix<Complex64>, a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) {
    let (m, k) = a.shape();
    let (k2, n) = b.shape();
    debug_assert_eq!(k, k2);
    debug_assert_eq!(c.shape(), (m, n));
    unsafe {
        zgemm(
            CGemmOption::Standard,
            CGemmOption::Standard,
            m,
            k,
            n,
            ONE,
            ptr(a),
            1,
            m as isize,
            ptr(b),
            1,
            k as isize,
            ZERO,
            ptr_mut(c),
            1,
            m as isize,
        );
    }
}

/// `c = a * b^H` (conjugate transpose of `b`).
pub(crate) fn gemm_adj(c: &mut DMatrix<Complex64>, a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) {
    let (m, k) = a.shape();
    let (n, k2) = b.shape();
    debug_assert_eq!(k, k2);
    debug_assert_eq!(c.shape(), (m, n));
    unsafe {
        zgemm(
            CGemmOption::Standard,
            CGemmOption::Conjugate,
            m,
            k,
            n,
            ONE,
            ptr(a),
            1,
            m as isize,
            ptr(b),
            n as isize,
            1,
            ZERO,
            ptr_mut(c),
            1,
            m as isize,
        );
    }
}

/// Fused pair of stacked-block products used by the restarting-QRC replay:
/// `sigma_out = a[0..h, :] * w[0..h, :]^H + a[h.., :] * w[h.., :]^H`
/// where `a` and `w` are `2h x h` and `sigma_out` is `h x h`.
pub(crate) fn gemm_block_adj_sum(
    sigma_out: &mut DMatrix<Complex64>,
    a: &DMatrix<Complex64>,
    w: &DMatrix<Complex64>,
) {
    let h = sigma_out.nrows();
    debug_assert_eq!(a.shape(), (2 * h, h));
    debug_assert_eq!(w.shape(), (2 * h, h));
    debug_assert_eq!(sigma_out.shape(), (h, h));
    let rows = 2 * h;
    unsafe {
        for block in 0..2 {
            let beta = if block == 0 { ZERO } else { ONE };
            zgemm(
                CGemmOption::Standard,
                CGemmOption::Conjugate,
                h,
                h,
                h,
                ONE,
                ptr(a).add(block * h),
                1,
                rows as isize,
                ptr(w).add(block * h),
                rows as isize,
                1,
                beta,
                ptr_mut(sigma_out),
                1,
                h as isize,
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn rand_mat(rows: usize, cols: usize, seed: u64) -> DMatrix<Complex64> {
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        DMatrix::from_fn(rows, cols, |_, _| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let re = (state % 1000) as f64 / 500.0 - 1.0;
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let im = (state % 1000) as f64 / 500.0 - 1.0;
            Complex64::new(re, im)
        })
    }

    #[test]
    fn gemm_matches_nalgebra() {
        let a = rand_mat(13, 7, 1);
        let b = rand_mat(7, 9, 2);
        let mut c = DMatrix::zeros(13, 9);
        gemm(&mut c, &a, &b);
        assert!((&c - &a * &b).norm() < 1e-12);
    }

    #[test]
    fn gemm_adj_matches_nalgebra() {
        let a = rand_mat(8, 5, 3);
        let b = rand_mat(6, 5, 4);
        let mut c = DMatrix::zeros(8, 6);
        gemm_adj(&mut c, &a, &b);
        assert!((&c - &a * b.adjoint()).norm() < 1e-12);
    }

    #[test]
    fn block_adj_sum_matches_reference() {
        let h = 4;
        let a = rand_mat(2 * h, h, 5);
        let w = rand_mat(2 * h, h, 6);
        let mut out = DMatrix::zeros(h, h);
        gemm_block_adj_sum(&mut out, &a, &w);
        let reference = a.view((0, 0), (h, h)) * w.view((0, 0), (h, h)).adjoint()
            + a.view((h, 0), (h, h)) * w.view((h, 0), (h, h)).adjoint();
        assert!((&out - reference).norm() < 1e-12);
    }
}
