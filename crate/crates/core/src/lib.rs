//! End-to-end pipeline for segmenting surgical instruments in endoscopic
//! video frames: dataset preparation, four encoder-decoder network
//! families, a combined cross-entropy + soft-Jaccard training objective,
//! IoU/Dice evaluation and inference benchmarking.
//!
//! The library is organized around the pipeline stages:
//!
//! - [`data`] — corpus ingestion, label encoding, fold splits and a
//!   synthetic corpus generator for dataset-independent testing.
//! - [`models`] — U-Net, TernausNet-11/16 and LinkNet-34 as trainable
//!   computational graphs with a shared shape contract.
//! - [`loss`] — the combined objective `L = H - log J`.
//! - [`metrics`] — exact discrete Jaccard/Dice scoring and report
//!   aggregation.
//! - [`training`] — fold-based optimization with validation tracking and
//!   checkpointing.
//! - [`inference`] — thresholded full-resolution prediction and latency
//!   benchmarking.
//! - [`viz`] — class palettes and mask overlays.

pub mod data;
pub mod inference;
pub mod loss;
pub mod metrics;
pub mod models;
pub mod training;
pub mod util;
pub mod viz;

pub mod cli;

pub use data::{FoldSplit, Sample, TaskKind};
pub use inference::{InferenceConfig, TimingReport};
pub use loss::{JaccardForm, LossValue};
pub use metrics::EvalReport;
pub use models::{ModelFamily, ModelSpec, Network};
pub use training::{TrainConfig, TrainLog};
