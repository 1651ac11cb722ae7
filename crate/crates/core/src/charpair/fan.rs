use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

use super::{CharacteristicPair, FaceId};

/// Smooth complete fan given by rays and maximal cones.
///
/// JSON: `{ "rays": [[..]], "max_cones": [[..]], "complete": true }`, cones
/// 1-based. `complete` defaults to true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan {
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    #[serde(default = "default_true")]
    pub complete: bool,
}

fn default_true() -> bool {
    true
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.rays.first().map_or(0, Vec::len)
    }

    fn cones_zero_based(&self) -> Result<Vec<FaceId>> {
        let d = self.rays.len();
        self.max_cones
            .iter()
            .map(|c| {
                if c.iter().any(|&i| i == 0 || i > d) {
                    return Err(Error::InvalidPair(format!("cone {c:?} refers to a missing ray")));
                }
                Ok(FaceId::new(c.iter().map(|i| i - 1).collect()))
            })
            .collect()
    }

    /// Checks that every maximal cone is unimodular and that every ridge lies
    /// in exactly two maximal cones.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        if !self.complete {
            return Err(Error::InvalidPair("fan is not declared complete".into()));
        }
        if let Some(r) = self.rays.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidPair(format!("ray {r:?} has the wrong dimension")));
        }
        let cones = self.cones_zero_based()?;
        for c in &cones {
            let rows: Vec<Vec<i64>> = c.facets().iter().map(|&i| self.rays[i].clone()).collect();
            let det = if rows.len() == n {
                IntMatrix::from_i64(&rows).determinant()
            } else {
                0.into()
            };
            if !det.abs().is_one() {
                return Err(Error::NonSmoothCone { cone: c.one_based(), det: det.to_string() });
            }
        }
        let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for c in &cones {
            for skip in 0..c.codim() {
                let ridge: Vec<usize> =
                    c.facets().iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, &i)| i).collect();
                ridges.entry(ridge).or_default();
            }
        }
        for (ridge, count) in ridges.iter_mut() {
            *count = cones.iter().filter(|c| ridge.iter().all(|i| c.contains_facet(*i))).count();
        }
        if let Some((ridge, &count)) = ridges.iter().find(|(_, &c)| c != 2) {
            return Err(Error::RidgePairingFailure {
                ridge: ridge.iter().map(|i| i + 1).collect(),
                count,
            });
        }
        Ok(())
    }

    /// Characteristic pair of the toric variety: facets are the rays, the
    /// nerve is generated by the maximal cones, `lambda` rows are the rays.
    pub fn to_pair(&self) -> Result<CharacteristicPair> {
        self.check()?;
        let nerve = self.cones_zero_based()?.into_iter().map(|c| c.facets().to_vec()).collect();
        CharacteristicPair::new(self.dim(), nerve, self.rays.clone())
    }
}

impl CharacteristicPair {
    pub fn from_fan(fan: &Fan) -> Result<Self> {
        fan.to_pair()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpair::samples;

    #[test]
    fn cp1_fan() {
        let fan = Fan { rays: vec![vec![1], vec![-1]], max_cones: vec![vec![1], vec![2]], complete: true };
        assert_eq!(fan.to_pair().unwrap(), samples::cp1());
    }

    #[test]
    fn cp2_fan() {
        let fan = Fan {
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            max_cones: vec![vec![1, 2], vec![2, 3], vec![3, 1]],
            complete: true,
        };
        let p = fan.to_pair().unwrap();
        assert_eq!(p, samples::cp2());
        assert!(p.validate().valid);
    }

    #[test]
    fn hirzebruch_fan() {
        let fan = Fan {
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, 1], vec![0, -1]],
            max_cones: vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 1]],
            complete: true,
        };
        let p = fan.to_pair().unwrap();
        assert!(p.validate().valid);
        assert_eq!(p.euler_characteristic(), 4);
    }

    #[test]
    fn singular_cone_is_rejected() {
        let fan = Fan {
            rays: vec![vec![1, 0], vec![1, 2], vec![-1, -1]],
            max_cones: vec![vec![1, 2], vec![2, 3], vec![3, 1]],
            complete: true,
        };
        assert!(matches!(fan.to_pair(), Err(Error::NonSmoothCone { .. })));
    }

    #[test]
    fn incomplete_fan_fails_ridge_check() {
        let fan = Fan {
            rays: vec![vec![1, 0], vec![0, 1], vec![-1, -1]],
            max_cones: vec![vec![1, 2], vec![2, 3]],
            complete: true,
        };
        assert!(matches!(fan.to_pair(), Err(Error::RidgePairingFailure { .. })));
    }
}
