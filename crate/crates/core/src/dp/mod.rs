//! Shared machinery of the module-width dynamic programs.

mod engine;
mod signature;
mod skeleton;
mod types;

pub use engine::{combine_signatures, Combined, DpTable, LabeledEdge, PartialColoring, Witness};
pub use signature::Signature;
pub use skeleton::{build_merge_skeleton, MergeSkeleton};
pub use types::{
    compatible, fall_type_of_class, is_valid_class, is_valid_fall_class, merge_type, type_of_class,
    ClassDesc, ClassType, ColorClassType, FallType, Label, MAX_CLASSES,
};
