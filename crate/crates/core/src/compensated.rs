//! Double-word accumulation built on fused multiply-add.
//!
//! Sums of products are carried as an unevaluated pair `hi + lo`, which keeps
//! the rounding error of a sum proportional to the *result* rather than to
//! the largest term.

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Acc {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Acc {
    #[inline]
    fn add_pair(&mut self, hi: f64, lo: f64) {
        let (s, e) = two_sum(self.hi, hi);
        let lo = self.lo + lo + e;
        let (s, e) = two_sum(s, lo);
        self.hi = s;
        self.lo = e;
    }

    #[inline]
    pub(crate) fn add_prod(&mut self, a: f64, b: f64) {
        let (p, e) = two_prod(a, b);
        self.add_pair(p, e);
    }

    /// Adds `a·b·c`, keeping the low word of `a·b`.
    #[inline]
    pub(crate) fn add_prod3(&mut self, a: f64, b: f64, c: f64) {
        let (p, e) = two_prod(a, b);
        let (q, f) = two_prod(p, c);
        self.add_pair(q, f + e * c);
    }

    #[inline]
    pub(crate) fn value(&self) -> f64 {
        self.hi + self.lo
    }

    /// `(self + other) · scale`, rounded once.
    #[inline]
    pub(crate) fn combine(mut self, other: &Acc, sign: f64, scale: f64) -> f64 {
        self.add_pair(sign * other.hi, sign * other.lo);
        self.value() * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancelled_sum() {
        let mut acc = Acc::default();
        acc.add_prod(1e8 + 1.0, 1e8 - 1.0);
        acc.add_prod(-1e8, 1e8);
        // (1e8+1)(1e8−1) − 1e16 = −1
        assert_eq!(acc.value(), -1.0);
    }

    #[test]
    fn triple_products() {
        let mut acc = Acc::default();
        let a = 1.0 + f64::EPSILON;
        acc.add_prod3(a, a, a);
        acc.add_prod3(-1.0, 1.0, 1.0);
        let exact = 3.0 * f64::EPSILON + 3.0 * f64::EPSILON * f64::EPSILON;
        assert!((acc.value() - exact).abs() <= 1e-3 * exact);
    }
}
