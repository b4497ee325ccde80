//! Enumeration bounds.
//!
//! Exceeding a bound is always a hard error, never silent truncation.  The
//! defaults below are the ones the CLI documents; fixture files may override
//! them.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Largest admissible object-group order.
    pub max_group_order: usize,
    /// Largest admissible arrow-group order.
    pub max_g1_order: usize,
    /// Largest admissible object count for an action space.
    pub max_space_objects: usize,
    /// Largest admissible arrow count for an action space.
    pub max_space_arrows: usize,
    /// Upper bound on the candidate count of any brute-force enumeration.
    pub max_enum_candidates: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_group_order: 12,
            max_g1_order: 16,
            max_space_objects: 8,
            max_space_arrows: 16,
            max_enum_candidates: 1_000_000,
        }
    }
}

impl Bounds {
    pub fn set(&mut self, key: &str, value: usize) -> bool {
        match key {
            "max_group_order" => self.max_group_order = value,
            "max_g1_order" => self.max_g1_order = value,
            "max_space_objects" => self.max_space_objects = value,
            "max_space_arrows" => self.max_space_arrows = value,
            "max_enum_candidates" => self.max_enum_candidates = value,
            _ => return false,
        }
        true
    }
}
