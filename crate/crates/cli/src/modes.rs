//! Enumeration of the leading Dirichlet modes of a domain, with the j-index
//! labeling used by the figure CSVs: sorted by (lambda^D, sector) ascending.

use finwell_core::dirichlet::{dirichlet_eigenvalue, normal_derivative_norm};
use finwell_core::domain::{Mode, Parity, Sector, WellDomain};

use crate::CliResult;

/// A labeled Dirichlet mode.
pub struct ModeInfo {
    /// 1-based index in the (lambda^D, nu/parity) ordering.
    pub j: usize,
    pub mode: Mode,
    pub lambda_d: f64,
    pub multiplicity: u32,
    /// ||du/dn||^2 on the boundary.
    pub boundary_norm_sq: f64,
}

fn sector_key(s: Sector) -> u32 {
    match s {
        Sector::Parity(Parity::Even) => 0,
        Sector::Parity(Parity::Odd) => 1,
        Sector::Angular(nu) => nu,
    }
}

/// The `count` lowest Dirichlet modes (one entry per eigenvalue branch;
/// degenerate ball eigenvalues appear once with their multiplicity).
pub fn leading_modes(
    domain: &WellDomain,
    count: usize,
    nu_max: Option<u32>,
) -> CliResult<Vec<ModeInfo>> {
    let mut found: Vec<(f64, Mode)> = Vec::new();
    // Current cutoff: the count-th smallest so far (infinite until filled).
    let cutoff = |found: &Vec<(f64, Mode)>| -> f64 {
        if found.len() < count {
            f64::INFINITY
        } else {
            let mut v: Vec<f64> = found.iter().map(|e| e.0).collect();
            v.sort_by(|a, b| a.partial_cmp(b).unwrap());
            v[count - 1]
        }
    };
    match domain {
        WellDomain::Interval { .. } => {
            for n in 1..=count as u32 {
                let mode = Mode::interval_nth(n);
                found.push((dirichlet_eigenvalue(domain, &mode)?, mode));
            }
        }
        WellDomain::Ball { .. } => {
            let mut nu = 0u32;
            loop {
                if let Some(max) = nu_max {
                    if nu > max {
                        break;
                    }
                }
                let first = dirichlet_eigenvalue(domain, &Mode::ball(nu, 1))?;
                if first > cutoff(&found) {
                    // Sector minima increase with nu: no later sector helps.
                    break;
                }
                let mut l = 1u32;
                loop {
                    let mode = Mode::ball(nu, l);
                    let lam = dirichlet_eigenvalue(domain, &mode)?;
                    if lam > cutoff(&found) {
                        break;
                    }
                    found.push((lam, mode));
                    l += 1;
                }
                nu += 1;
            }
        }
    }
    found.sort_by(|x, y| {
        (x.0, sector_key(x.1.sector))
            .partial_cmp(&(y.0, sector_key(y.1.sector)))
            .unwrap()
    });
    found.truncate(count);
    found
        .into_iter()
        .enumerate()
        .map(|(i, (lambda_d, mode))| {
            let multiplicity = match mode.sector {
                Sector::Angular(nu) => domain.sector_multiplicity(nu),
                Sector::Parity(_) => 1,
            };
            let boundary_norm_sq =
                normal_derivative_norm(domain, &mode)?.normal_derivative_norm_sq;
            Ok(ModeInfo { j: i + 1, mode, lambda_d, multiplicity, boundary_norm_sq })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_modes_alternate_parity() {
        let dom = WellDomain::interval(2.0).unwrap();
        let modes = leading_modes(&dom, 5, None).unwrap();
        assert_eq!(modes.len(), 5);
        for (i, m) in modes.iter().enumerate() {
            assert_eq!(m.j, i + 1);
            let want = if i % 2 == 0 { Parity::Even } else { Parity::Odd };
            assert_eq!(m.mode.sector, Sector::Parity(want));
        }
        // Ascending eigenvalues.
        for w in modes.windows(2) {
            assert!(w[0].lambda_d < w[1].lambda_d);
        }
    }

    #[test]
    fn disk_mode_ordering_and_multiplicity() {
        // The disk multiplicity pattern over j = 1..9 is 1,2,2,1,2,2,2,2,1:
        // j=4 and j=9 are the simple nu=0 branches.
        let disk = WellDomain::ball(2.0, 2).unwrap();
        let modes = leading_modes(&disk, 9, None).unwrap();
        let mult: Vec<u32> = modes.iter().map(|m| m.multiplicity).collect();
        assert_eq!(mult, vec![1, 2, 2, 1, 2, 2, 2, 2, 1]);
        let nus: Vec<u32> = modes.iter().map(|m| m.mode.sector.nu().unwrap()).collect();
        assert_eq!(nus, vec![0, 1, 2, 0, 3, 1, 4, 2, 0]);
    }

    #[test]
    fn nu_cap_respected() {
        let disk = WellDomain::ball(2.0, 2).unwrap();
        let modes = leading_modes(&disk, 9, Some(1)).unwrap();
        assert!(modes.iter().all(|m| m.mode.sector.nu().unwrap() <= 1));
        assert_eq!(modes.len(), 9);
    }
}
