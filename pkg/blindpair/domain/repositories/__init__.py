from .i_pair_reader_repository import IPairReaderRepository
from .i_pillow_cache_repository import IPillowCacheRepository
from .i_result_writer_repository import IResultWriterRepository
