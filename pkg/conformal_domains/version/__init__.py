from conformal_domains.version.version import get_version

__version__ = get_version()
