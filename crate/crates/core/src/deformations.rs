//! Placeholder; implemented in a later build step.
