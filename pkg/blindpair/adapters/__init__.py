from .infra.numpy import NpzPillowCacheRepository
from .infra.pandas import PandasPairReaderRepository, PandasResultWriterRepository
