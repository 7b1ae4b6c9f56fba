#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod clifford;
pub mod exact;
pub mod matrix;
pub mod sections;
pub mod dynsym;
pub mod spectrum;
pub mod reptheory;
pub mod integrate;
pub mod ladder;
