from .states import CheckStatus, CommandName, SeriesId, BundleKind, FixtureFamily
from .global_config import GlobalConfig
from .report import VerificationReport, to_jsonable, dump_reports
from .run_config import RunConfig

global_config = GlobalConfig()

__all__ = [
    'CheckStatus',
    'CommandName',
    'SeriesId',
    'BundleKind',
    'FixtureFamily',
    'VerificationReport',
    'to_jsonable',
    'dump_reports',
    'RunConfig',
    'global_config',
]
