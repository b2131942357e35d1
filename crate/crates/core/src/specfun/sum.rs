/// Neumaier's variant of Kahan summation. Also tracks the sum of absolute
/// values so callers can derive a rounding-error bound.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
    abs: f64,
    count: u64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
        self.count += 1;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub fn abs_sum(&self) -> f64 {
        self.abs
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Rounding bound: the compensated accumulation is nearly exact, so what
    /// remains is the per-term evaluation error, taken as 2 ulp of each term.
    pub fn rounding_err(&self) -> f64 {
        4.0 * f64::EPSILON * self.value().abs() + 2.0 * f64::EPSILON * self.abs
    }
}

impl Extend<f64> for NeumaierSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::new();
        s.extend(iter);
        s
    }
}
