//! Oracles shared by the integration tests.
#![allow(dead_code)]

pub mod cech;
pub mod dense;
pub mod series;
