"""Exception types shared across the pipeline."""


class PoolwatchError(Exception):
    """Base class for all pipeline errors."""


class WrongContentType(PoolwatchError):
    """Fetched body is not plausibly the requested transparency document."""


class MalformedHar(PoolwatchError):
    """HTTP-archive document fails structural validation."""


class SnapshotAborted(PoolwatchError):
    """Snapshot store unavailable or unwritable."""


class DuplicateSnapshotId(PoolwatchError):
    """A snapshot with this id already exists in the store."""


class UnknownSnapshotId(PoolwatchError):
    """No stored snapshot with this id."""


class CorruptSnapshot(PoolwatchError):
    """Stored snapshot fails its integrity checksums."""


class NoContactFound(PoolwatchError):
    """Every contact-discovery source was exhausted without a deliverable address."""


class ProbeUnavailable(PoolwatchError):
    """Deliverability probing requested but no prober is configured."""


class EmptyRecipientSet(PoolwatchError):
    """A notification round selected zero recipients."""


class MissingContact(PoolwatchError):
    """Cannot render a notification for an entity without a contact record."""


class NothingToReport(PoolwatchError):
    """Entity has zero findings/evidence; no notification is warranted."""


class ControlGroupExcluded(PoolwatchError):
    """Rendering was attempted for a control-group entity."""


class OverlapWithPriorRound(PoolwatchError):
    """A round was scheduled before the prior round's post-snapshot completes."""


class EmptyControlPool(PoolwatchError):
    """Nearest-neighbor matching requires at least one control candidate."""


class NoPairs(PoolwatchError):
    """Difference-in-differences needs at least one matched pair."""


class DegenerateSample(PoolwatchError):
    """A sample is too small or has zero variance for the requested test."""


class WorkspaceLocked(PoolwatchError):
    """Another pipeline invocation holds the workspace lock."""
