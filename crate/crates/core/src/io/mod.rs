//! Instance files, generators and JSON reports.

pub mod format;
pub mod generate;
pub mod report;

pub use format::{emit_instance, parse_instance};
pub use generate::{cycle, generate, random, random_corpus, spanning, CorpusSpec, InstanceKind, RandomParams};
pub use report::{ReportFile, TerminalCutFile};
