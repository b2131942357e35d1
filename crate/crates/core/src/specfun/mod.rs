//! Scalar special-function kernels. Every kernel returns a value together
//! with an absolute-error estimate.

mod barnes;
mod bernoulli;
mod clausen;
mod constants;
mod expint;
mod gamma;
mod lambda;
mod sici;
mod stieltjes;
mod sum;
mod trig;
mod zeta;

pub use barnes::log_barnes_g;
pub use bernoulli::{bernoulli_number, bernoulli_poly};
pub use clausen::clausen_cl2;
pub use constants::{constants, ConstantsCache};
pub use expint::exp_integral;
pub use gamma::{digamma, digamma_real, log_gamma, polygamma};
pub use lambda::{lambda_digamma, lambda_fn, lambda_series};
pub use sici::{ci, ci_lattice_asymptotic, si, si_lattice_asymptotic, sici};
pub use stieltjes::stieltjes_gamma1;
pub use sum::NeumaierSum;
pub use trig::{cospi, sinpi, versinpi};
pub use zeta::{hurwitz_derivs, zeta_family, zeta_int, ZetaKind};

use num_complex::Complex64;
use serde::Serialize;

pub type Cplx = Complex64;

pub(crate) const EPS: f64 = f64::EPSILON;

/// A value with a claimed absolute-error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FnEvalResult<T = f64> {
    pub value: T,
    pub abs_err: f64,
}

impl<T> FnEvalResult<T> {
    pub fn new(value: T, abs_err: f64) -> Self {
        FnEvalResult { value, abs_err: abs_err.abs() }
    }
}

impl FnEvalResult<f64> {
    pub fn exact(value: f64) -> Self {
        FnEvalResult { value, abs_err: EPS * value.abs() }
    }

    pub fn scale(self, c: f64) -> Self {
        FnEvalResult::new(c * self.value, c.abs() * self.abs_err)
    }
}

impl std::ops::Add for FnEvalResult<f64> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        FnEvalResult::new(self.value + o.value, self.abs_err + o.abs_err + EPS * (self.value + o.value).abs())
    }
}

impl std::ops::Sub for FnEvalResult<f64> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        FnEvalResult::new(self.value - o.value, self.abs_err + o.abs_err + EPS * (self.value - o.value).abs())
    }
}

impl std::ops::Mul for FnEvalResult<f64> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let v = self.value * o.value;
        FnEvalResult::new(v, self.abs_err * o.value.abs() + o.abs_err * self.value.abs() + self.abs_err * o.abs_err + EPS * v.abs())
    }
}

impl std::ops::Div for FnEvalResult<f64> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let v = self.value / o.value;
        FnEvalResult::new(v, self.abs_err / o.value.abs() + v.abs() * o.abs_err / o.value.abs() + EPS * v.abs())
    }
}

impl std::ops::Neg for FnEvalResult<f64> {
    type Output = Self;
    fn neg(self) -> Self {
        FnEvalResult::new(-self.value, self.abs_err)
    }
}

pub(crate) fn check_arg(x: f64, what: &str) -> crate::Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::NonFinite(format!("{what} argument {x}")))
    }
}
