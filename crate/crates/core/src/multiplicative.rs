//! Single entry point for multiplicative error.
//!
//! `eps <= 1` runs the binary schedule directly, `1 < eps < 7` runs it with
//! `eps = 1` (the guarantee `L / 2` is stronger than requested), and
//! `eps >= 7` runs the base-`k` schedule.

use crate::engine::{Answer, Engine, PushStats};
use crate::error::ParamError;
use crate::fingerprint::{HashConfig, Symbol};
use crate::mult_large::MultLarge;
use crate::mult_small::MultSmall;

#[derive(Debug, Clone)]
pub enum Multiplicative {
    Small(MultSmall),
    Large(MultLarge),
}

impl Multiplicative {
    pub fn new(cfg: HashConfig, eps: f64) -> Result<Self, ParamError> {
        if !eps.is_finite() || eps <= 0.0 {
            return Err(ParamError::Epsilon(eps));
        }
        Ok(if eps <= 1.0 {
            Self::Small(MultSmall::new(cfg, eps)?)
        } else if eps < 7.0 {
            Self::Small(MultSmall::new(cfg, 1.0)?)
        } else {
            Self::Large(MultLarge::new(cfg, eps)?)
        })
    }

    /// The `eps` the underlying engine actually guarantees.
    pub fn effective_eps(&self) -> f64 {
        match self {
            Self::Small(m) => m.params().eps(),
            Self::Large(m) => m.params().eps(),
        }
    }

    pub fn checkpoint_count(&self) -> usize {
        match self {
            Self::Small(m) => m.checkpoint_count(),
            Self::Large(m) => m.checkpoint_count(),
        }
    }
}

impl Engine for Multiplicative {
    fn push(&mut self, a: Symbol) {
        match self {
            Self::Small(m) => m.push(a),
            Self::Large(m) => m.push(a),
        }
    }

    fn answer(&self) -> Answer {
        match self {
            Self::Small(m) => m.answer(),
            Self::Large(m) => m.answer(),
        }
    }

    fn pushed(&self) -> u64 {
        match self {
            Self::Small(m) => m.pushed(),
            Self::Large(m) => m.pushed(),
        }
    }

    fn space_words(&self) -> usize {
        match self {
            Self::Small(m) => m.space_words(),
            Self::Large(m) => m.space_words(),
        }
    }

    fn last_stats(&self) -> PushStats {
        match self {
            Self::Small(m) => m.last_stats(),
            Self::Large(m) => m.last_stats(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routing() {
        let cfg = HashConfig::from_seed(0);
        let pick = |eps| Multiplicative::new(cfg.clone(), eps).unwrap();
        assert!(matches!(pick(0.5), Multiplicative::Small(_)));
        assert!(matches!(pick(3.0), Multiplicative::Small(_)));
        assert_eq!(pick(3.0).effective_eps(), 1.0);
        assert!(matches!(pick(7.0), Multiplicative::Large(_)));
        assert!(Multiplicative::new(cfg.clone(), 0.0).is_err());
        assert!(Multiplicative::new(cfg.clone(), -1.0).is_err());
        assert!(Multiplicative::new(cfg, f64::INFINITY).is_err());
    }
}
