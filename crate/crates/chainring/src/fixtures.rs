//! Named ring and tower fixtures used by the CLI, docs and test suites.

use crate::error::{Error, Result};
use crate::ext::Tower;
use crate::ring::{Family, Ring};

pub const FIXTURE_NAMES: &[&str] = &["z4", "z8", "z9", "gr42", "gr43", "f2u2", "f8u2"];

/// The fixture as a plain ring. Also accepts an inline ring JSON object,
/// so every emitted ring encoding can be fed back in.
pub fn ring(name: &str) -> Result<Ring> {
    if name.trim_start().starts_with('{') {
        let dto: crate::io::RingDto =
            serde_json::from_str(name).map_err(|e| Error::Parse(e.to_string()))?;
        return crate::io::ring_from_dto(&dto);
    }
    match name {
        "z4" => Ring::make(Family::Unramified, 2, 1, 2, None),
        "z8" => Ring::make(Family::Unramified, 2, 1, 3, None),
        "z9" => Ring::make(Family::Unramified, 3, 1, 2, None),
        "gr42" => Ring::make(Family::Unramified, 2, 2, 2, None),
        "gr43" => Ring::make(Family::Unramified, 2, 3, 2, None),
        "f2u2" => Ring::make(Family::EqualChar, 2, 1, 2, None),
        "f8u2" => Ring::make(Family::EqualChar, 2, 3, 2, None),
        other => Err(Error::Parse(format!("unknown ring fixture `{other}`"))),
    }
}

/// The fixture as a tower: extensions for gr42/gr43/f8u2 (over z4 and f2u2),
/// the trivial tower otherwise.
pub fn tower(name: &str) -> Result<Tower> {
    match name {
        "gr42" => Tower::extend(&ring("z4")?, 2),
        "gr43" => Tower::extend(&ring("z4")?, 3),
        "f8u2" => Tower::extend(&ring("f2u2")?, 3),
        other => Tower::extend(&ring(other)?, 1),
    }
}
