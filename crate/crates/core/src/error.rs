//! Crate-wide error type with stable, machine-readable names.

use thiserror::Error;

use crate::fan::FanError;
use crate::fvec::FvecError;
use crate::hj::HjError;
use crate::hochschild::HochschildError;
use crate::linalg::LinalgError;
use crate::lvm::LvmError;
use crate::nctorus::NcTorusError;
use crate::polytope::PolytopeError;
use crate::quotient::QuotientError;
use crate::scalar::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error(transparent)]
    Lvm(#[from] LvmError),
    #[error(transparent)]
    Hj(#[from] HjError),
    #[error(transparent)]
    NcTorus(#[from] NcTorusError),
    #[error(transparent)]
    Fvec(#[from] FvecError),
    #[error(transparent)]
    Hochschild(#[from] HochschildError),
}

impl Error {
    /// Variant name of the innermost error, e.g. `"Unbounded"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Scalar(e) => scalar_name(e),
            Error::Linalg(e) => linalg_name(e),
            Error::Polytope(e) => polytope_name(e),
            Error::Fan(e) => fan_name(e),
            Error::Quotient(e) => match e {
                QuotientError::CodimensionOne(_) => "CodimensionOne",
                QuotientError::RankDeficient { .. } => "RankDeficient",
                QuotientError::Polytope(e) => polytope_name(e),
            },
            Error::Lvm(e) => match e {
                LvmError::InvalidConfiguration(_) => "InvalidConfiguration",
                LvmError::DegenerateSystem { .. } => "DegenerateSystem",
                LvmError::DegenerateFoliation { .. } => "DegenerateFoliation",
                LvmError::WrongDimension { .. } => "WrongDimension",
                LvmError::IrrationalWeights => "IrrationalWeights",
                LvmError::Polytope(e) => polytope_name(e),
                LvmError::Field(e) => scalar_name(e),
            },
            Error::Hj(e) => match e {
                HjError::OutOfRange(_) => "OutOfRange",
                HjError::DivisionByZero => "DivisionByZero",
                HjError::InvalidDigits(_) => "InvalidDigits",
                HjError::NotNormalizable(_) => "NotNormalizable",
                HjError::Fan(e) => fan_name(e),
                HjError::Field(e) => scalar_name(e),
            },
            Error::NcTorus(e) => match e {
                NcTorusError::RationalInput(_) => "RationalInput",
                NcTorusError::PoleAtInput(_) => "PoleAtInput",
                NcTorusError::PeriodNotFound(_) => "PeriodNotFound",
            },
            Error::Fvec(e) => match e {
                FvecError::LengthMismatch { .. } => "LengthMismatch",
                FvecError::BadLeadingEntry(_) => "BadLeadingEntry",
            },
            Error::Hochschild(e) => match e {
                HochschildError::InvalidAlgebra(_) => "InvalidAlgebra",
                HochschildError::NotAssociative(..) => "NotAssociative",
                HochschildError::UnitLaw(_) => "UnitLaw",
                HochschildError::InvalidGroupoid(_) => "InvalidGroupoid",
                HochschildError::DegreeZero => "DegreeZero",
                HochschildError::ComplexTooLarge { .. } => "ComplexTooLarge",
                HochschildError::InvalidTruncation => "InvalidTruncation",
                HochschildError::ChainMismatch => "ChainMismatch",
            },
        }
    }
}

fn scalar_name(e: &ScalarError) -> &'static str {
    match e {
        ScalarError::FieldMismatch(..) => "FieldMismatch",
        ScalarError::DivisionByZero => "DivisionByZero",
        ScalarError::Parse { .. } => "ParseError",
    }
}

fn linalg_name(e: &LinalgError) -> &'static str {
    match e {
        LinalgError::Shape { .. } => "ShapeMismatch",
        LinalgError::DimensionMismatch(_) => "DimensionMismatch",
        LinalgError::Field(e) => scalar_name(e),
    }
}

fn polytope_name(e: &PolytopeError) -> &'static str {
    match e {
        PolytopeError::InvalidInput(_) => "InvalidInput",
        PolytopeError::Unbounded => "Unbounded",
        PolytopeError::Empty => "Empty",
        PolytopeError::NotFullDimensional => "NotFullDimensional",
        PolytopeError::NotSimple(_) => "NotSimple",
        PolytopeError::IrrationalNormals(_) => "IrrationalNormals",
        PolytopeError::Field(e) => scalar_name(e),
    }
}

fn fan_name(e: &FanError) -> &'static str {
    match e {
        FanError::InvalidInput(_) => "InvalidInput",
        FanError::NotSimplicial => "NotSimplicial",
        FanError::NonRational => "NonRational",
        FanError::WrongDimension { .. } => "WrongDimension",
        FanError::DimensionMismatch(..) => "DimensionMismatch",
        FanError::Unsupported(_) => "Unsupported",
        FanError::Polytope(e) => polytope_name(e),
        FanError::Field(e) => scalar_name(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_see_through_wrappers() {
        let e: Error = QuotientError::Polytope(PolytopeError::Unbounded).into();
        assert_eq!(e.name(), "Unbounded");
        let e: Error = HjError::Fan(FanError::Field(ScalarError::DivisionByZero)).into();
        assert_eq!(e.name(), "DivisionByZero");
        assert_eq!(Error::from(HochschildError::DegreeZero).name(), "DegreeZero");
    }
}
