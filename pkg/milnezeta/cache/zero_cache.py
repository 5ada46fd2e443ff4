import hashlib
import os

from ..models.schemas import ZeroTable


class ZeroTableCache:
    """On-disk store of scanned zero tables, keyed by the scan parameters."""

    def __init__(self, cache_dir='cache_data'):
        self.cache_dir = cache_dir
        if not os.path.exists(cache_dir):
            os.makedirs(cache_dir)

    def _hash_scan(self, T_max, grid_step):
        """Hash the scan parameters using SHA256 and return the hexadecimal hash."""
        return hashlib.sha256(f"{float(T_max)!r}:{float(grid_step)!r}".encode()).hexdigest()

    def _get_cache_file_path(self, T_max, grid_step):
        return os.path.join(self.cache_dir, f"{self._hash_scan(T_max, grid_step)}_zeros.txt")

    def get_cached_table(self, T_max, grid_step):
        from ..zeros.zeros_oracle import load_zero_table
        cache_file = self._get_cache_file_path(T_max, grid_step)
        if not os.path.exists(cache_file):
            return None
        with open(cache_file, 'rb') as file:
            return load_zero_table(file)

    def cache_table(self, T_max, grid_step, table: ZeroTable):
        from ..zeros.zeros_oracle import dump_zero_table
        cache_file = self._get_cache_file_path(T_max, grid_step)
        with open(cache_file, 'wb') as file:
            dump_zero_table(table, file)

    def invalidate_cache(self, T_max, grid_step):
        cache_file = self._get_cache_file_path(T_max, grid_step)
        if os.path.exists(cache_file):
            os.remove(cache_file)
