#include "bimatrix/outcome.hpp"

namespace bimatrix {

const char* to_string(SolveStep step) {
  switch (step) {
    case SolveStep::kBaseStep2: return "Base.Step2";
    case SolveStep::kBaseStep3: return "Base.Step3";
    case SolveStep::kBaseStep4: return "Base.Step4";
    case SolveStep::kImprovedStep2: return "Improved.Step2";
    case SolveStep::kImprovedStep3: return "Improved.Step3";
    case SolveStep::kImprovedStep4Shift: return "Improved.Step4Shift";
    case SolveStep::kImprovedStep5Pure: return "Improved.Step5Pure";
    case SolveStep::kImprovedStep5MP: return "Improved.Step5MP";
    case SolveStep::kImprovedFallback: return "Improved.Fallback";
    case SolveStep::kWinLoseStep2: return "WinLose.Step2";
    case SolveStep::kWinLoseStep3: return "WinLose.Step3";
    case SolveStep::kWinLoseStep4: return "WinLose.Step4";
    case SolveStep::kApxNeStep1: return "ApxNE.Step1";
    case SolveStep::kApxNeStep2: return "ApxNE.Step2";
  }
  return "unknown";
}

}  // namespace bimatrix
