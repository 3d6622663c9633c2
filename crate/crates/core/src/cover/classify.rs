use serde::{Deserialize, Serialize};

use super::CombinatorialSurface;

/// Homeomorphism type of a closed connected surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceType {
    pub connected: bool,
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Human label, e.g. `"sphere"`, `"Klein bottle (N₂)"`.
    pub name: String,
    /// ASCII symbol: `S<genus>` or `N<crosscaps>`.
    pub symbol: String,
}

impl SurfaceType {
    /// Type of the closed connected surface with the given invariants, or
    /// `None` when no such surface exists.
    pub fn from_invariants(euler_characteristic: i64, orientable: bool) -> Option<SurfaceType> {
        let (name, symbol) = if orientable {
            if euler_characteristic > 2 || euler_characteristic % 2 != 0 {
                return None;
            }
            let genus = ((2 - euler_characteristic) / 2) as u64;
            let name = match genus {
                0 => "sphere".to_string(),
                1 => "torus (S₁)".to_string(),
                2 => "double torus (S₂)".to_string(),
                3 => "triple torus (S₃)".to_string(),
                g => format!("genus-{g} surface (S{})", subscript(g)),
            };
            (name, format!("S{genus}"))
        } else {
            if euler_characteristic > 1 {
                return None;
            }
            let k = (2 - euler_characteristic) as u64;
            let name = match k {
                1 => "projective plane (N₁)".to_string(),
                2 => "Klein bottle (N₂)".to_string(),
                k => format!(
                    "sphere with {} cross-caps (N{})",
                    count_word(k),
                    subscript(k)
                ),
            };
            (name, format!("N{k}"))
        };
        Some(SurfaceType {
            connected: true,
            euler_characteristic,
            orientable,
            name,
            symbol,
        })
    }

    /// Orientable genus, or the number of cross-caps for non-orientable
    /// surfaces.
    pub fn genus(&self) -> u64 {
        if self.orientable {
            ((2 - self.euler_characteristic) / 2) as u64
        } else {
            (2 - self.euler_characteristic) as u64
        }
    }
}

fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

fn count_word(n: u64) -> String {
    const WORDS: [&str; 13] = [
        "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten",
        "eleven", "twelve",
    ];
    WORDS
        .get(n as usize)
        .map_or_else(|| n.to_string(), |w| w.to_string())
}

/// Type of every component, in component order.
pub fn classify(m: &CombinatorialSurface) -> Vec<SurfaceType> {
    m.component_stats()
        .into_iter()
        .map(|c| {
            SurfaceType::from_invariants(c.euler_characteristic(), c.orientable)
                .expect("components of a closed surface have realizable invariants")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let t = |chi, o| SurfaceType::from_invariants(chi, o).unwrap().name;
        assert_eq!(t(2, true), "sphere");
        assert_eq!(t(0, true), "torus (S₁)");
        assert_eq!(t(-4, true), "triple torus (S₃)");
        assert_eq!(t(-22, true), "genus-12 surface (S₁₂)");
        assert_eq!(t(0, false), "Klein bottle (N₂)");
        assert_eq!(t(-2, false), "sphere with four cross-caps (N₄)");
        assert_eq!(t(-4, false), "sphere with six cross-caps (N₆)");
        assert_eq!(t(-20, false), "sphere with 22 cross-caps (N₂₂)");
    }

    #[test]
    fn invariants_constrain_existence() {
        assert!(SurfaceType::from_invariants(1, true).is_none());
        assert!(SurfaceType::from_invariants(4, true).is_none());
        assert!(SurfaceType::from_invariants(2, false).is_none());
        for chi in -10..=2 {
            if let Some(s) = SurfaceType::from_invariants(chi, true) {
                assert_eq!(2 - 2 * s.genus() as i64, chi);
                assert_eq!(s.symbol, format!("S{}", s.genus()));
            }
            if let Some(s) = SurfaceType::from_invariants(chi, false) {
                assert_eq!(2 - s.genus() as i64, chi);
                assert!(chi <= 1);
            }
        }
    }
}
