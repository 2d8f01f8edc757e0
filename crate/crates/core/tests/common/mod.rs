//! Naive reference implementations, written against the definitions and
//! sharing no code with the engine beyond table construction.
#![allow(dead_code)]

use magma_lab::Magma;

/// Every table of order `n`, built by nested base-`n` counting with the
/// first cell most significant.
pub fn naive_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = vec![0; cells];
            for c in (0..cells).rev() {
                flat[c] = code % n;
                code /= n;
            }
            flat.chunks(n).map(<[usize]>::to_vec).collect()
        })
        .collect()
}

pub fn to_magma(t: &[Vec<usize>]) -> Magma {
    Magma::from_table(t.len(), t).unwrap()
}

/// Every column hits every element.
pub fn naive_right_entire(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).any(|a| t[a][x] == y)))
}

/// Mutual reachability: for all x, y some a, b with a*x = y and b*y = x.
pub fn naive_condition_i(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            let there = (0..n).any(|a| t[a][x] == y);
            let back = (0..n).any(|b| t[b][y] == x);
            if !(there && back) {
                return false;
            }
        }
    }
    true
}

/// For all x, y, z some w with x*(y*z) = w*z.
pub fn naive_condition_ii(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = t[x][t[y][z]];
                if !(0..n).any(|w| t[w][z] == lhs) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_right_feeble(t: &[Vec<usize>]) -> bool {
    naive_condition_i(t) && naive_condition_ii(t)
}

/// a*x = y and b*y = x force x = y.
pub fn naive_right_asymmetric(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    for x in 0..n {
        for y in 0..n {
            if x != y && (0..n).any(|a| t[a][x] == y) && (0..n).any(|b| t[b][y] == x) {
                return false;
            }
        }
    }
    true
}

pub fn naive_associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])))
}

pub fn naive_group(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    let Some(e) = (0..n).find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x)) else {
        return false;
    };
    naive_associative(t) && (0..n).all(|x| (0..n).any(|y| t[x][y] == e && t[y][x] == e))
}

pub fn naive_leftoid(t: &[Vec<usize>]) -> bool {
    t.iter().all(|row| row.iter().all(|&v| v == row[0]))
}

pub fn naive_rightoid(t: &[Vec<usize>]) -> bool {
    t.iter().all(|row| row == &t[0])
}

pub fn naive_constant(t: &[Vec<usize>]) -> bool {
    t.iter().flatten().all(|&v| v == t[0][0])
}

/// Some z with z*x = z for all x.
pub fn naive_zero_fixed(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).any(|z| (0..n).all(|x| t[z][x] == z))
}

/// Some e with a*x = a only when x = e.
pub fn naive_right_id_forcing(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).any(|e| (0..n).all(|a| (0..n).all(|x| t[a][x] != a || x == e)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Relabel by `p`: the new table sends (p x, p y) to p(x*y).
pub fn relabel(t: &[Vec<usize>], p: &[usize]) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[p[x]][p[y]] = p[t[x][y]];
        }
    }
    out
}

/// Number of isomorphism classes among `tables`, by brute-force minimum
/// over every relabeling.
pub fn naive_iso_classes(tables: &[Vec<Vec<usize>>]) -> usize {
    let mut seen: Vec<Vec<Vec<usize>>> =
        tables.iter().map(|t| permutations(t.len()).iter().map(|p| relabel(t, p)).min().unwrap()).collect();
    seen.sort();
    seen.dedup();
    seen.len()
}

pub fn naive_count(n: usize, pred: impl Fn(&[Vec<usize>]) -> bool) -> (usize, usize) {
    let hits: Vec<_> = naive_tables(n).into_iter().filter(|t| pred(t)).collect();
    (hits.len(), naive_iso_classes(&hits))
}
