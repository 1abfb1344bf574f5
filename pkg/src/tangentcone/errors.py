"""Exception hierarchy. Each pipeline rejection carries a stable reason code."""


class PipelineRejection(Exception):
    """An input the theory does not cover. Not a failure of the tool."""

    reason = "Rejected"

    def __init__(self, message="", **detail):
        super().__init__(message or self.reason)
        self.detail = detail


class GcdNotOne(PipelineRejection):
    reason = "GcdNotOne"


class NotMinimallyGenerated(PipelineRejection):
    reason = "NotMinimallyGenerated"


class NotSymmetric(PipelineRejection):
    reason = "NotSymmetric"


class CompleteIntersection(PipelineRejection):
    reason = "CompleteIntersection"


class StructureAmbiguous(PipelineRejection):
    reason = "StructureAmbiguous"


class UnsupportedCase(PipelineRejection):
    reason = "UnsupportedCase"


class RestrictionViolated(PipelineRejection):
    reason = "RestrictionViolated"


class VariantMismatch(PipelineRejection):
    reason = "VariantMismatch"


class InternalInconsistency(Exception):
    """A consequence the theory guarantees did not hold."""


class InhomogeneousEntry(ValueError):
    pass


class WitnessMismatch(Exception):
    pass


class CoprimalityFailure(Exception):
    pass
