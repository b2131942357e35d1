use super::{clausen, gamma, stieltjes, zeta};
use std::f64::consts::PI;
use std::sync::OnceLock;

/// Mathematical constants used across the kernels, computed once from the
/// kernels themselves rather than copied from tables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantsCache {
    pub gamma: f64,
    pub gamma1: f64,
    pub log_2pi: f64,
    pub zeta2: f64,
    pub zeta3: f64,
    pub zeta_prime_2: f64,
    pub zeta_prime2_2: f64,
    pub zeta_prime_neg1: f64,
    /// log of the Glaisher–Kinkelin constant, 1/12 − ζ′(−1).
    pub log_a: f64,
    pub catalan: f64,
}

impl ConstantsCache {
    fn build() -> Self {
        let gamma = -gamma::digamma_real(1.0).expect("ψ(1)").value;
        let z2 = zeta::hurwitz_derivs(2.0, 1.0, 2).expect("ζ(2)");
        let zeta3 = zeta::hurwitz_derivs(3.0, 1.0, 0).expect("ζ(3)")[0].value;
        let zeta_prime_neg1 = zeta::zeta_prime_neg1_from(gamma, z2[1].value);
        ConstantsCache {
            gamma,
            gamma1: stieltjes::stieltjes_gamma1().value,
            log_2pi: (2.0 * PI).ln(),
            zeta2: z2[0].value,
            zeta3,
            zeta_prime_2: z2[1].value,
            zeta_prime2_2: z2[2].value,
            zeta_prime_neg1,
            log_a: 1.0 / 12.0 - zeta_prime_neg1,
            catalan: clausen::clausen_core(PI / 2.0).0,
        }
    }
}

pub fn constants() -> &'static ConstantsCache {
    static CACHE: OnceLock<ConstantsCache> = OnceLock::new();
    CACHE.get_or_init(ConstantsCache::build)
}
