//! Library half of the `hurwitz` command: input resolution, text reports
//! and the acceptance table behind `hurwitz reproduce`.

pub mod report;
pub mod reproduce;
pub mod source;
