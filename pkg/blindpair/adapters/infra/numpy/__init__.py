from .npz_pillow_cache_repository import FORMAT_VERSION, NpzPillowCacheRepository
