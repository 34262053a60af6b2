//! Exact integer determinants by Bareiss fraction-free elimination.

/// Determinant of the `n x n` row-major matrix `m`, consumed as scratch space.
///
/// Every intermediate value is itself a minor of the input, so nothing leaves
/// the integers and the magnitude is bounded by Hadamard's inequality.
pub fn bareiss(n: usize, m: &mut [i128]) -> i128 {
    debug_assert_eq!(m.len(), n * n);
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                return 0;
            };
            for c in 0..n {
                m.swap(k * n + c, swap * n + c);
            }
            sign = -sign;
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i * n + j] * pivot - m[i * n + k] * m[k * n + j];
                debug_assert_eq!(v % prev, 0);
                m[i * n + j] = v / prev;
            }
        }
        prev = pivot;
    }
    sign * m[(n - 1) * n + (n - 1)]
}

/// Determinant of the principal submatrix of the `n x n` matrix `a` on the indices in `idx`.
pub fn principal_det(a: &[i64], n: usize, idx: &[usize]) -> i128 {
    let k = idx.len();
    let mut buf = [0i128; 144];
    let scratch: &mut [i128] = if k * k <= buf.len() {
        &mut buf[..k * k]
    } else {
        return bareiss(k, &mut gather(a, n, idx));
    };
    for (r, &i) in idx.iter().enumerate() {
        for (c, &j) in idx.iter().enumerate() {
            scratch[r * k + c] = a[i * n + j] as i128;
        }
    }
    bareiss(k, scratch)
}

fn gather(a: &[i64], n: usize, idx: &[usize]) -> Vec<i128> {
    idx.iter()
        .flat_map(|&i| idx.iter().map(move |&j| a[i * n + j] as i128))
        .collect()
}
