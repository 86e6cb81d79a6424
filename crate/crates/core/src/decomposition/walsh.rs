//! Fast Walsh–Hadamard transform.

use crate::scalar::Real;

/// In-place unnormalized transform: `out_s = Σ_j (−1)^{popcount(s & j)} in_j`.
///
/// `data.len()` must be a power of two.
pub fn fwht<T: Real>(data: &mut [T]) {
    let n = data.len();
    assert!(n.is_power_of_two(), "fwht length must be a power of two");
    let mut h = 1;
    while h < n {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}
