//! Finite magmas stored as Cayley tables, plus the constructors for every
//! groupoid family the rest of the crate works with.
//!
//! Elements are the indices `0..n`. The table is row-major with the row as
//! the left operand, so `table[l * n + r] = l * r`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{MagmaError, Result};

/// Largest order any magma may have. Element sets are `u64` bitmasks.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Magma {
    order: usize,
    table: Vec<u8>,
}

impl Magma {
    /// Builds a magma from its rows. `rows[l][r]` is the product `l * r`.
    pub fn from_table<R: AsRef<[usize]>>(order: usize, rows: &[R]) -> Result<Self> {
        check_order(order)?;
        if rows.len() != order {
            return Err(MagmaError::RowCount { expected: order, found: rows.len() });
        }
        let mut table = Vec::with_capacity(order * order);
        for (l, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(MagmaError::RowLength { row: l, expected: order, found: row.len() });
            }
            for (r, &entry) in row.iter().enumerate() {
                if entry >= order {
                    return Err(MagmaError::EntryOutOfRange { row: l, col: r, entry, order });
                }
                table.push(entry as u8);
            }
        }
        Ok(Magma { order, table })
    }

    /// Builds a magma from a flattened row-major table.
    pub fn from_flat(order: usize, flat: Vec<u8>) -> Result<Self> {
        check_order(order)?;
        if flat.len() != order * order {
            return Err(MagmaError::RowCount { expected: order, found: flat.len() / order });
        }
        if let Some(pos) = flat.iter().position(|&e| e as usize >= order) {
            return Err(MagmaError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                entry: flat[pos] as usize,
                order,
            });
        }
        Ok(Magma { order, table: flat })
    }

    /// Caller guarantees `flat` has `order^2` in-range entries.
    pub(crate) fn from_flat_unchecked(order: usize, flat: Vec<u8>) -> Self {
        debug_assert_eq!(flat.len(), order * order);
        debug_assert!(flat.iter().all(|&e| (e as usize) < order));
        Magma { order, table: flat }
    }

    /// Builds a magma by evaluating `op` on every pair.
    pub(crate) fn from_fn(order: usize, op: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for l in 0..order {
            for r in 0..order {
                let v = op(l, r);
                debug_assert!(v < order);
                table.push(v as u8);
            }
        }
        Magma { order, table }
    }

    pub(crate) fn table_mut(&mut self) -> &mut [u8] {
        &mut self.table
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `l * r`.
    #[inline]
    pub fn op(&self, l: usize, r: usize) -> usize {
        self.table[l * self.order + r] as usize
    }

    /// Flattened row-major table.
    #[inline]
    pub fn flat(&self) -> &[u8] {
        &self.table
    }

    #[inline]
    pub fn row(&self, l: usize) -> &[u8] {
        &self.table[l * self.order..(l + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|row| row.iter().map(|&e| e as usize).collect()).collect()
    }

    /// `X * r`, the set of values in column `r`.
    #[inline]
    pub fn column_image(&self, r: usize) -> ElementSet {
        let n = self.order;
        let mut bits = 0u64;
        let mut i = r;
        while i < self.table.len() {
            bits |= 1 << self.table[i];
            i += n;
        }
        ElementSet(bits)
    }

    /// `l * X`, the set of values in row `l`.
    #[inline]
    pub fn row_image(&self, l: usize) -> ElementSet {
        ElementSet(self.row(l).iter().fold(0u64, |acc, &e| acc | 1 << e))
    }

    pub fn column_images(&self) -> Vec<ElementSet> {
        (0..self.order).map(|r| self.column_image(r)).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Relabels the magma along the bijection `perm`: the result satisfies
    /// `perm(x) . perm(y) = perm(x * y)`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n || !is_permutation(perm) {
            return Err(MagmaError::NotPermutation(perm.to_vec()));
        }
        let mut table = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)] as u8;
            }
        }
        Ok(Magma { order: n, table })
    }

    /// Renders the Cayley-table text format: the order on the first line,
    /// then one line per row with single-space separators.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for row in self.table.chunks(self.order) {
            out.push_str(&row.iter().join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (header_line, header) =
            lines.next().ok_or(MagmaError::Parse { line: 1, message: "missing order header".into() })?;
        let order: usize = header.parse().map_err(|_| MagmaError::Parse {
            line: header_line,
            message: format!("malformed order header {header:?}"),
        })?;
        check_order(order)?;
        let mut rows = Vec::with_capacity(order);
        for (line, text) in lines {
            if rows.len() == order {
                return Err(MagmaError::Parse { line, message: format!("expected {order} rows, found more") });
            }
            let row = text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| MagmaError::Parse { line, message: format!("non-integer token {tok:?}") })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != order {
                return Err(MagmaError::Parse {
                    line,
                    message: format!("expected {order} entries, found {}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&e| e >= order) {
                return Err(MagmaError::Parse { line, message: format!("entry {bad} out of range for order {order}") });
            }
            rows.push(row);
        }
        if rows.len() != order {
            return Err(MagmaError::Parse {
                line: header_line,
                message: format!("expected {order} rows, found {}", rows.len()),
            });
        }
        Magma::from_table(order, &rows)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("magma serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| MagmaError::Json(e.to_string()))
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Magma({}; {:?})", self.order, self.rows())
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Magma {
    type Err = MagmaError;

    /// Accepts either the text table format or the JSON object form.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Magma::from_json(s)
        } else {
            Magma::parse(s)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MagmaJson {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl Serialize for Magma {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MagmaJson { order: self.order, table: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Magma {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MagmaJson::deserialize(d)?;
        Magma::from_table(raw.order, &raw.table).map_err(serde::de::Error::custom)
    }
}

/// A subset of `0..n` for `n <= 64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// The whole carrier `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        ElementSet(elements.into_iter().fold(0, |acc, e| acc | 1 << e))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1 << x;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(MagmaError::EmptyOrder)
    } else if order > MAX_ORDER {
        Err(MagmaError::OrderTooLarge { order, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

fn check_element(element: usize, order: usize) -> Result<()> {
    if element >= order {
        Err(MagmaError::ElementOutOfRange { element, order })
    } else {
        Ok(())
    }
}

fn check_map(order: usize, map: &[usize]) -> Result<()> {
    if map.len() != order {
        return Err(MagmaError::RowLength { row: 0, expected: order, found: map.len() });
    }
    map.iter().try_for_each(|&v| check_element(v, order))
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = 0u64;
    perm.iter().all(|&p| {
        let fresh = p < perm.len() && seen >> p & 1 == 0;
        seen |= 1 << (p & 63);
        fresh
    })
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `x * y = c` for all `x, y`.
pub fn constant(n: usize, c: usize) -> Result<Magma> {
    check_order(n)?;
    check_element(c, n)?;
    Ok(Magma::from_fn(n, |_, _| c))
}

/// `x * y = x`.
pub fn left_zero(n: usize) -> Result<Magma> {
    check_order(n)?;
    Ok(Magma::from_fn(n, |l, _| l))
}

/// `x * y = y`.
pub fn right_zero(n: usize) -> Result<Magma> {
    check_order(n)?;
    Ok(Magma::from_fn(n, |_, r| r))
}

/// Leftoid over `f`: `x * y = f(x)`.
pub fn leftoid(n: usize, f: &[usize]) -> Result<Magma> {
    check_order(n)?;
    check_map(n, f)?;
    Ok(Magma::from_fn(n, |l, _| f[l]))
}

/// Rightoid over `g`: `x * y = g(y)`.
pub fn rightoid(n: usize, g: &[usize]) -> Result<Magma> {
    check_order(n)?;
    check_map(n, g)?;
    Ok(Magma::from_fn(n, |_, r| g[r]))
}

/// Addition modulo `n`.
pub fn cyclic_group(n: usize) -> Result<Magma> {
    check_order(n)?;
    Ok(Magma::from_fn(n, |l, r| (l + r) % n))
}

/// Multiplication modulo `m`.
pub fn multiplicative(m: usize) -> Result<Magma> {
    check_order(m)?;
    Ok(Magma::from_fn(m, |l, r| (l * r) % m))
}

/// Averaging over the integers modulo an odd `m`: `x * y = (x + y) / 2`.
pub fn midpoint(m: usize) -> Result<Magma> {
    check_order(m)?;
    if m % 2 == 0 {
        return Err(MagmaError::EvenModulus(m));
    }
    // 2 * (m + 1) / 2 = m + 1 = 1 (mod m)
    let half = (m + 1) / 2 % m;
    Ok(Magma::from_fn(m, |l, r| (l + r) * half % m))
}

/// `x * y = alpha + beta x + gamma y` over the prime field `Z_p`.
pub fn affine(p: usize, alpha: usize, beta: usize, gamma: usize) -> Result<Magma> {
    check_order(p)?;
    if !is_prime(p) {
        return Err(MagmaError::NotPrime(p));
    }
    for c in [alpha, beta, gamma] {
        check_element(c, p)?;
    }
    if beta == 0 {
        return Err(MagmaError::ZeroCoefficient { name: "beta", modulus: p });
    }
    if gamma == 0 {
        return Err(MagmaError::ZeroCoefficient { name: "gamma", modulus: p });
    }
    Ok(Magma::from_fn(p, |l, r| (alpha + beta * l + gamma * r) % p))
}

/// Addition on `{0, ..., k}` capped at `k`.
pub fn saturating_add(k: usize) -> Result<Magma> {
    check_order(k + 1)?;
    Ok(Magma::from_fn(k + 1, |l, r| (l + r).min(k)))
}

/// The symmetric group on `k` points. Elements are the permutations in
/// lexicographic order and `p * q` is the composite `p after q`.
pub fn symmetric_group(k: usize) -> Result<Magma> {
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    check_order(perms.len())?;
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    Ok(Magma::from_fn(perms.len(), |l, r| {
        let composed: Vec<usize> = (0..k).map(|i| perms[l][perms[r][i]]).collect();
        index(&composed)
    }))
}
