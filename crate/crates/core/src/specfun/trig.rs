use std::f64::consts::PI;

/// x − 2·round(x/2), which is exact, so the result lies in [−1, 1].
fn reduce(x: f64) -> f64 {
    x - 2.0 * (x / 2.0).round()
}

/// sin πx with the argument reduced exactly before scaling by π.
pub fn sinpi(x: f64) -> f64 {
    let r = reduce(x);
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// cos πx with the argument reduced exactly before scaling by π.
pub fn cospi(x: f64) -> f64 {
    let r = reduce(x).abs();
    if r <= 0.25 {
        (PI * r).cos()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

/// 1 − cos πx = 2 sin²(πx/2), free of cancellation near even x.
pub fn versinpi(x: f64) -> f64 {
    2.0 * sinpi(x / 2.0).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_points() {
        assert_eq!(sinpi(1.0), 0.0);
        assert_eq!(sinpi(-3.0), 0.0);
        assert_eq!(cospi(0.5), 0.0);
        assert_eq!(cospi(2.0), 1.0);
        assert_eq!(versinpi(2.0), 0.0);
    }

    #[test]
    fn agrees_with_std_away_from_zeros() {
        for i in 0..200 {
            let x = -5.0 + 0.0537 * i as f64;
            assert!((sinpi(x) - (PI * x).sin()).abs() < 1e-14);
            assert!((cospi(x) - (PI * x).cos()).abs() < 1e-14);
        }
    }

    #[test]
    fn relative_accuracy_near_two() {
        // 1 − cos(1.999π) = 4.9347981418328011767e-6
        let v = versinpi(1.999);
        assert!((v / 4.934_798_141_832_801e-6 - 1.0).abs() < 1e-14);
    }
}
