//! Cayley-graph geometry of F with respect to `{x0, x1, x0^-1, x1^-1}`.

mod ball;
mod fordham;
mod oracle;

pub use ball::{Ball, CACHE_HEADER};
pub use fordham::{
    fordham_length, CaretRule, FordhamBackend, FordhamTable, DEFAULT_FORDHAM_TABLE,
    FORDHAM_VALIDATION_RADIUS,
};
pub use oracle::{cayley_distance, fellow_traveler_constant, geodesic_length, LengthOracle};

/// Environment variable overriding [`Limits::max_members`].
pub const MAX_BALL_ENV: &str = "THOMPSON_MAX_BALL";

/// Caps on breadth-first searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest radius [`Ball::build`] accepts.
    pub max_radius: usize,
    /// Largest number of elements held by any one search.
    pub max_members: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_radius: 9,
            max_members: 20_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with the member cap taken from `THOMPSON_MAX_BALL` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var(MAX_BALL_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_members = n;
        }
        limits
    }
}

/// Builds the ball of radius `r` with limits from the environment.
pub fn ball(r: usize) -> crate::Result<Ball> {
    Ball::build(r, &Limits::from_env())
}
