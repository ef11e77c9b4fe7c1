#include "rba/errors.hpp"

namespace rba {

const char* precondition_code_name(PreconditionCode code) {
    switch (code) {
        case PreconditionCode::NotAStar: return "NotAStar";
        case PreconditionCode::WrongColorCount: return "WrongColorCount";
        case PreconditionCode::SeedMissingMultiRoot: return "SeedMissingMultiRoot";
        case PreconditionCode::NotRainbowSeed: return "NotRainbowSeed";
        case PreconditionCode::NotAllPaths: return "NotAllPaths";
        case PreconditionCode::ShapeViolation: return "ShapeViolation";
        case PreconditionCode::TooManyMultiRoots: return "TooManyMultiRoots";
        case PreconditionCode::TooFewColors: return "TooFewColors";
        case PreconditionCode::NotUnderlyingTree: return "NotUnderlyingTree";
        case PreconditionCode::TargetTooLarge: return "TargetTooLarge";
        case PreconditionCode::InvalidReducedCertificate: return "InvalidReducedCertificate";
        case PreconditionCode::NotRootedAtS1: return "NotRootedAtS1";
        case PreconditionCode::PathNotFound: return "PathNotFound";
        case PreconditionCode::NotAPerfectMatching: return "NotAPerfectMatching";
        case PreconditionCode::InvalidHypergraph: return "InvalidHypergraph";
        case PreconditionCode::InfeasibleSpec: return "InfeasibleSpec";
        case PreconditionCode::TooLarge: return "TooLarge";
    }
    return "?";
}

}  // namespace rba
