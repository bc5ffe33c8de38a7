pub mod cli;
pub mod cohind;
pub mod error;
pub mod halfint;
pub mod oracle;
pub mod packets;
pub mod tableaux;
pub mod weights;
