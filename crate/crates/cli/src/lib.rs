pub mod commands;
pub mod record;
pub mod suite;
