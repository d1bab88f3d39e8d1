//! Minimal double-double accumulator for the transform oracle's log
//! bookkeeping, where individual terms reach ~1e10 nats but the answer needs
//! the difference of such terms to ~1e-8 absolute.

/// Error-free sum: s + err == a + b exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free product via FMA: p + err == a * b exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn from_prod(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let lo = e + self.lo + other.lo;
        let (hi, lo) = two_sum(s, lo);
        Dd { hi, lo }
    }

    pub fn add_f64(self, x: f64) -> Dd {
        self.add(Dd::from_f64(x))
    }

    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_keeps_small_residual() {
        // (1e16 + 0.5) - 1e16 == 0.5 exactly in double-double
        let a = Dd::from_f64(1e16).add_f64(0.5);
        let r = a.sub(Dd::from_f64(1e16));
        assert_eq!(r.to_f64(), 0.5);
    }

    #[test]
    fn product_error_term() {
        // pi * big: double-double keeps ~32 digits
        let x = 1.0e9 + 1.0 / 3.0;
        let p = Dd::from_prod(x, std::f64::consts::PI);
        let direct = x * std::f64::consts::PI;
        assert!((p.hi - direct).abs() <= direct.abs() * 1e-15);
        // residual vs naive product is below 1 ulp of the product
        assert!(p.lo.abs() < direct.abs() * 2.3e-16);
    }
}
