pub use num_rational::BigRational;
