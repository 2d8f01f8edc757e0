//! Direct products and the product of binary systems on a common carrier.

use crate::error::{MagmaError, Result};
use crate::magma::{Magma, MAX_ORDER};

/// Default cap on the order of a direct product.
pub const DEFAULT_PRODUCT_MAX: usize = 64;

/// Row-major pairing between `X x Y` and `0..|X||Y|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductIndexing {
    pub right_order: usize,
}

impl ProductIndexing {
    #[inline]
    pub fn encode(self, x: usize, y: usize) -> usize {
        x * self.right_order + y
    }

    #[inline]
    pub fn decode(self, index: usize) -> (usize, usize) {
        (index / self.right_order, index % self.right_order)
    }
}

/// Componentwise product `(x, y)(u, v) = (x * u, y . v)`.
pub fn direct_product(a: &Magma, b: &Magma) -> Result<Magma> {
    direct_product_with_limit(a, b, DEFAULT_PRODUCT_MAX)
}

pub fn direct_product_with_limit(a: &Magma, b: &Magma, max_order: usize) -> Result<Magma> {
    let order = a.order() * b.order();
    let max = max_order.min(MAX_ORDER);
    if order > max {
        return Err(MagmaError::OrderTooLarge { order, max });
    }
    let ix = ProductIndexing { right_order: b.order() };
    Ok(Magma::from_fn(order, |p, q| {
        let ((x, y), (u, v)) = (ix.decode(p), ix.decode(q));
        ix.encode(a.op(x, u), b.op(y, v))
    }))
}

/// Product of two operations on the same carrier:
/// `x [] y = (x * y) . (y * x)` with `a = *` inner and `b = .` outer.
pub fn bin_product(a: &Magma, b: &Magma) -> Result<Magma> {
    if a.order() != b.order() {
        return Err(MagmaError::OrderMismatch { left: a.order(), right: b.order() });
    }
    Ok(Magma::from_fn(a.order(), |x, y| b.op(a.op(x, y), a.op(y, x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::*;
    use crate::properties::*;

    #[test]
    fn indexing_round_trips() {
        let ix = ProductIndexing { right_order: 3 };
        for x in 0..4 {
            for y in 0..3 {
                assert_eq!(ix.decode(ix.encode(x, y)), (x, y));
            }
        }
    }

    #[test]
    fn klein_four() {
        let c2 = cyclic_group(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(is_associative(&v4).holds);
        let g = as_group(&v4).unwrap();
        assert_eq!(g.identity, 0);
        assert_eq!(g.inverse, vec![0, 1, 2, 3]);
    }

    #[test]
    fn trivial_factor_is_neutral() {
        let m = midpoint(5).unwrap();
        let one = constant(1, 0).unwrap();
        assert_eq!(direct_product(&m, &one).unwrap(), m);
        assert_eq!(direct_product(&one, &m).unwrap(), m);
    }

    #[test]
    fn midpoint_times_cyclic_is_right_feeble() {
        let p = direct_product(&midpoint(3).unwrap(), &cyclic_group(2).unwrap()).unwrap();
        assert_eq!(p.order(), 6);
        assert!(is_right_feeble(&p).holds);
    }

    #[test]
    fn product_limit() {
        let c = cyclic_group(9).unwrap();
        assert!(matches!(direct_product(&c, &c), Err(MagmaError::OrderTooLarge { order: 81, .. })));
        assert!(direct_product_with_limit(&c, &c, 10).is_err());
        assert!(direct_product_with_limit(&c, &cyclic_group(2).unwrap(), 18).is_ok());
    }

    #[test]
    fn bin_product_examples() {
        let lz = left_zero(2).unwrap();
        for code in 0..16u8 {
            let m = Magma::from_flat(2, (0..4).map(|i| code >> i & 1).collect()).unwrap();
            assert_eq!(bin_product(&lz, &m).unwrap(), m);
            assert_eq!(bin_product(&m, &lz).unwrap(), m);
        }
        let c = bin_product(&constant(2, 0).unwrap(), &constant(2, 1).unwrap()).unwrap();
        assert_eq!(c, constant(2, 1).unwrap());
        assert!(matches!(
            bin_product(&lz, &left_zero(3).unwrap()),
            Err(MagmaError::OrderMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn leftoid_composition() {
        let maps: Vec<[usize; 3]> = (0..27).map(|c| [c % 3, c / 3 % 3, c / 9]).collect();
        for f in &maps {
            for g in &maps {
                let composed: Vec<usize> = (0..3).map(|x| g[f[x]]).collect();
                assert_eq!(
                    bin_product(&leftoid(3, f).unwrap(), &leftoid(3, g).unwrap()).unwrap(),
                    leftoid(3, &composed).unwrap()
                );
            }
        }
    }
}
