//! Shared domain types: the four behavior classes and the weather conditions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("invalid behavior class code {0}, expected 0-3")]
    InvalidClassCode(u8),
}

/// Driver behavior class, ordered from harmless to hazardous.
///
/// The integer codes are the wire representation used in feature CSVs and
/// per-window prediction reports.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum BehaviorClass {
    Normal = 0,
    Intermediate = 1,
    Aggressive = 2,
    Dangerous = 3,
}

impl BehaviorClass {
    pub const COUNT: usize = 4;

    pub const ALL: [BehaviorClass; 4] = [
        BehaviorClass::Normal,
        BehaviorClass::Intermediate,
        BehaviorClass::Aggressive,
        BehaviorClass::Dangerous,
    ];

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_code(code: u8) -> Result<Self, DomainError> {
        match code {
            0 => Ok(BehaviorClass::Normal),
            1 => Ok(BehaviorClass::Intermediate),
            2 => Ok(BehaviorClass::Aggressive),
            3 => Ok(BehaviorClass::Dangerous),
            other => Err(DomainError::InvalidClassCode(other)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BehaviorClass::Normal => "Normal",
            BehaviorClass::Intermediate => "Intermediate",
            BehaviorClass::Aggressive => "Aggressive",
            BehaviorClass::Dangerous => "Dangerous",
        }
    }
}

impl std::fmt::Display for BehaviorClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Weather condition attached to a trip; scales the posted speed limit down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeatherType {
    Sunny,
    SoftRain,
    Foggy,
    Stormy,
}

impl WeatherType {
    pub const ALL: [WeatherType; 4] = [
        WeatherType::Sunny,
        WeatherType::SoftRain,
        WeatherType::Foggy,
        WeatherType::Stormy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeatherType::Sunny => "Sunny",
            WeatherType::SoftRain => "SoftRain",
            WeatherType::Foggy => "Foggy",
            WeatherType::Stormy => "Stormy",
        }
    }
}

impl std::fmt::Display for WeatherType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_codes_round_trip() {
        for class in BehaviorClass::ALL {
            assert_eq!(BehaviorClass::from_code(class.code()), Ok(class));
        }
        assert_eq!(
            BehaviorClass::from_code(4),
            Err(DomainError::InvalidClassCode(4))
        );
    }

    #[test]
    fn class_order_tracks_severity() {
        assert!(BehaviorClass::Normal < BehaviorClass::Intermediate);
        assert!(BehaviorClass::Intermediate < BehaviorClass::Aggressive);
        assert!(BehaviorClass::Aggressive < BehaviorClass::Dangerous);
    }
}
