//! Desk-scale language-model pretraining with a verifiable training recipe:
//! ALiBi/RMSNorm/SwiGLU decoder, curated + decontaminated data, multi-teacher
//! minimum-cross-entropy distillation, batch-size warmup, and loss-spike
//! checkpoint rollback. Every subsystem is deterministic under a seed.

pub mod cli;
pub mod datapipe;
pub mod distill;
pub mod evalharness;
pub mod model;
pub mod numerics;
pub mod synth;
pub mod tokenizer;
pub mod trainer;
pub mod util;
