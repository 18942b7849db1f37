pub mod ambient;
pub mod bundle;
pub mod category;
pub mod cli;
pub mod classical;
pub mod coend;
pub mod elements;
pub mod fixtures;
pub mod internal;
pub mod linalg;
pub mod report;
pub mod search;
pub mod theorems;
