//! Cartan matrices of the finite-type series and a few named indefinite ones.
//!
//! Vertices follow Bourbaki numbering (0-based here). For the non-simply-laced
//! types the long/short assignment follows `a[i][j] = <alpha_j, alpha_i^vee>`.

use crate::gcm::CartanMatrix;

fn chain(n: usize) -> Vec<i64> {
    let mut e = vec![0i64; n * n];
    for i in 0..n {
        e[i * n + i] = 2;
        if i + 1 < n {
            e[i * n + i + 1] = -1;
            e[(i + 1) * n + i] = -1;
        }
    }
    e
}

fn build(n: usize, e: Vec<i64>) -> CartanMatrix {
    CartanMatrix::from_flat(n, e).expect("standard Cartan matrices are valid")
}

/// `A_n`, `n >= 1`.
pub fn a(n: usize) -> CartanMatrix {
    assert!(n >= 1);
    build(n, chain(n))
}

/// `B_n`, `n >= 2`; the last simple root is short.
pub fn b(n: usize) -> CartanMatrix {
    assert!(n >= 2);
    let mut e = chain(n);
    e[(n - 1) * n + (n - 2)] = -2;
    build(n, e)
}

/// `C_n`, `n >= 2`; the transpose of `B_n`.
pub fn c(n: usize) -> CartanMatrix {
    b(n).dual()
}

/// `D_n`, `n >= 4`; the last two simple roots both attach to vertex `n - 3`.
pub fn d(n: usize) -> CartanMatrix {
    assert!(n >= 4);
    let mut e = chain(n);
    e[(n - 2) * n + (n - 1)] = 0;
    e[(n - 1) * n + (n - 2)] = 0;
    e[(n - 3) * n + (n - 1)] = -1;
    e[(n - 1) * n + (n - 3)] = -1;
    build(n, e)
}

/// `E_6`, `E_7`, `E_8`: chain `1-3-4-..-n` with vertex 2 on vertex 4.
pub fn e(n: usize) -> CartanMatrix {
    assert!((6..=8).contains(&n), "E_n is finite only for n = 6, 7, 8");
    e_series(n)
}

/// `E_n` shape for any `n >= 4` (`E_9` is affine `E_8^(1)`, `E_10` hyperbolic).
pub fn e_series(n: usize) -> CartanMatrix {
    assert!(n >= 4);
    let mut e = vec![0i64; n * n];
    let mut link = |i: usize, j: usize| {
        e[i * n + j] = -1;
        e[j * n + i] = -1;
    };
    link(0, 2);
    link(1, 3);
    for i in 2..n - 1 {
        link(i, i + 1);
    }
    for i in 0..n {
        e[i * n + i] = 2;
    }
    build(n, e)
}

/// `F_4`; the first two simple roots are long.
pub fn f4() -> CartanMatrix {
    let mut e = chain(4);
    e[2 * 4 + 1] = -2;
    build(4, e)
}

/// `G_2` as `[[2,-1],[-3,2]]`.
pub fn g2() -> CartanMatrix {
    build(2, vec![2, -1, -3, 2])
}

/// `E_10`: `E_8` with a two-vertex tail attached to the end of its long arm.
pub fn e10() -> CartanMatrix {
    e_series(10)
}

/// All finite-type fixtures of rank at most `max_rank`, with names.
pub fn finite_fixtures(max_rank: usize) -> Vec<(String, CartanMatrix)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push((format!("A{n}"), a(n)));
    }
    for n in 2..=max_rank {
        out.push((format!("B{n}"), b(n)));
    }
    for n in 3..=max_rank {
        out.push((format!("C{n}"), c(n)));
    }
    for n in 4..=max_rank {
        out.push((format!("D{n}"), d(n)));
    }
    for n in 6..=max_rank.min(8) {
        out.push((format!("E{n}"), e(n)));
    }
    if max_rank >= 4 {
        out.push(("F4".to_string(), f4()));
    }
    if max_rank >= 2 {
        out.push(("G2".to_string(), g2()));
    }
    out
}
