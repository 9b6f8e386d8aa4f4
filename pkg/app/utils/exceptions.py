from typing import Any, Dict, Optional

class FewPathsError(Exception):
    """Base exception for path-counting errors"""
    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

class SpectralError(FewPathsError):
    """Base exception for spectral computations"""
    pass

class NumericalFailure(SpectralError):
    """Exception for a decomposition that did not converge"""
    pass

class ThresholdOnSingularValue(SpectralError):
    """Exception for a truncation threshold that hits a singular value"""
    pass

class ThresholdUnresolvable(SpectralError):
    """Exception for a threshold draw that kept landing on singular values"""
    pass

class SpectralBoundViolated(SpectralError):
    """Exception for a matrix whose largest singular value exceeds Z"""
    pass

class PromiseViolationSuspected(FewPathsError):
    """Exception for an estimate that cannot be rounded with confidence"""
    def __init__(self, message: str, raw_value: float = None, margin: float = None):
        self.raw_value = raw_value
        self.margin = margin
        super().__init__(message, {"raw_value": raw_value, "margin": margin})

class ConfigInvalid(FewPathsError):
    """Exception for invalid experiment configuration"""
    def __init__(self, message: str, field: str = None):
        self.field = field
        super().__init__(message, {"field": field})

class GraphFormatError(ConfigInvalid):
    """Exception for malformed edge-list input"""
    def __init__(self, message: str, line: int = None):
        self.line = line
        super().__init__(message, field="graph")
        self.details["line"] = line

class IOFailure(FewPathsError):
    """Exception for unreadable or unwritable paths"""
    def __init__(self, message: str, path: str = None):
        self.path = path
        super().__init__(message, {"path": path})
