//! Rhythm formant analysis toolkit.
//!
//! The crate turns speech recordings into low-frequency amplitude-modulation
//! rhythm descriptors and companion spectral features, and evaluates how well
//! those features separate two language classes:
//!
//! - [`corpus`]: WAV ingestion, manifests, segmentation, peak normalization.
//! - [`envelope`]: full-wave rectification + Butterworth low-pass envelope.
//! - [`spectrum`]: normalized low-frequency (0-5 Hz) magnitude spectrum.
//! - [`rhythm`]: dominant-peak descriptors (NDP, MFDP, VFDP) with threshold sweeps.
//! - [`specmod`]: orthonormal DCT-II shape coefficients of the LF spectrum.
//! - [`mfcc`]: 13 MFCC + deltas pooled to a 78-dim utterance vector.
//! - [`stats`]: Welch tests, PCA, random-intercept mixed models, Bhattacharyya distance.
//! - [`learn`]: speaker-grouped cross-validated linear SVM / MLP experiments.
//! - [`synth`]: synthetic corpora with known modulation ground truth.
//! - [`pipeline`]: batch feature extraction (parallel by default, see the
//!   `parallel` feature).
//!
//! With the default `parallel` feature, per-utterance work is distributed with
//! rayon; disabling it compiles a sequential fallback with identical results.

pub mod corpus;
pub mod envelope;
pub mod exec;
pub mod features;
pub mod learn;
pub mod mfcc;
pub mod pipeline;
pub mod rhythm;
pub mod specmod;
pub mod spectrum;
pub mod stats;
pub mod synth;

pub use corpus::{Manifest, ManifestEntry, Waveform};
pub use envelope::Envelope;
pub use features::UtteranceFeatureRow;
pub use rhythm::{Peak, RhythmFeatures};
pub use spectrum::LFSpectrum;
