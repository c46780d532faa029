//! Small helpers around the Gamma function for Bessel evaluation.

/// Taylor coefficients of 1/Gamma(z) = sum c_k z^k (Abramowitz & Stegun 6.1.34).
const RECIP_GAMMA: [f64; 26] = [
    1.00000000000000000000,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.04200263503409523553,
    0.16653861138229148950,
    -0.04219773455554433675,
    -0.00962197152787697356,
    0.00721894324666309954,
    -0.00116516759185906511,
    -0.00021524167411495097,
    0.00012805028238811619,
    -0.00002013485478078824,
    -0.00000125049348214267,
    0.00000113302723198170,
    -0.00000020563384169776,
    0.00000000611609510448,
    0.00000000500200764447,
    -0.00000000118127457049,
    0.00000000010434267117,
    0.00000000000778226344,
    -0.00000000000369680562,
    0.00000000000051003703,
    -0.00000000000002058326,
    -0.00000000000000534812,
    0.00000000000000122678,
    -0.00000000000000011813,
];

/// 1/Gamma(1+mu) for |mu| <= 1, full double precision.
pub fn recip_gamma_one_plus(mu: f64) -> f64 {
    debug_assert!(mu.abs() <= 1.0 + 1e-12);
    // 1/Gamma(1+mu) = sum_k c_{k+1} mu^k  (since Gamma(1+mu) = mu*Gamma(mu)).
    let mut acc = 0.0;
    for &c in RECIP_GAMMA.iter().rev() {
        acc = acc * mu + c;
    }
    // acc = sum c_k mu^{k-1} evaluated Horner-style starting at c_1 term:
    // the loop above computes sum_{k=1}^{26} c_k mu^{k-1}.
    acc
}

/// The Temme coefficients used in the small-x series for K_mu, |mu| <= 1/2:
/// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)   (limit -EulerGamma at mu=0),
/// gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2,
/// gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu).
pub fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let gampl = recip_gamma_one_plus(mu);
    let gammi = recip_gamma_one_plus(-mu);
    // Odd part of the series, summed directly to avoid the 0/0 at mu = 0.
    let mut gam1 = 0.0;
    let mu2 = mu * mu;
    // c_{k+1} mu^k has odd k for k = 1, 3, 5, ...; gam1 = -sum_{k odd} c_{k+1} mu^{k-1}.
    let mut p = 1.0;
    for k in (1..RECIP_GAMMA.len()).step_by(2) {
        gam1 -= RECIP_GAMMA[k] * p;
        p *= mu2;
    }
    let gam2 = 0.5 * (gammi + gampl);
    (gam1, gam2, gampl, gammi)
}

/// Gamma(x) for x > 0.
pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recip_gamma_matches_libm() {
        for &mu in &[-0.5, -0.3, -1e-8, 0.0, 1e-8, 0.25, 0.5, 0.75, 1.0] {
            let want = 1.0 / libm::tgamma(1.0 + mu);
            assert!(
                (recip_gamma_one_plus(mu) - want).abs() <= 1e-14 * want.abs().max(1.0),
                "mu={mu}"
            );
        }
    }

    #[test]
    fn temme_gam1_limit_is_minus_euler_gamma() {
        let (gam1, _, _, _) = temme_gammas(0.0);
        assert!((gam1 + 0.57721566490153286061).abs() < 1e-15);
    }

    #[test]
    fn temme_gammas_consistent() {
        let mu = 0.37;
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        assert!((gam1 - (gammi - gampl) / (2.0 * mu)).abs() < 1e-13);
        assert!((gam2 - (gammi + gampl) / 2.0).abs() < 1e-15);
    }
}
