//! Hyperspectral object tracking engine and evaluation harness.
//!
//! The pipeline ingests hyperspectral video (mosaic or pre-stacked cubes),
//! ranks spectral bands by object/background dissimilarity, regroups them
//! into three-band pseudo-color images, and tracks a single object by fusing
//! per-frame detections, Gaussian candidate proposals, and a constant-velocity
//! Kalman filter. Candidates are refined by a small classifier whose fully
//! connected head is trained online; convolutional features stay fixed.
//! A one-pass evaluation module produces success/precision curves, AUC and
//! DP@20 pixel scores per sequence.

pub mod augment;
pub mod babs;
pub mod classifier;
pub mod config;
pub mod detector;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod hsio;
pub mod kalman;
pub mod proposal;
pub mod synth;
pub mod tracker;

pub use error::{Error, Result};
pub use geometry::BBox;
