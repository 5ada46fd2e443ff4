from .zero_cache import ZeroTableCache
