from .pandas_pair_reader_repository import PandasPairReaderRepository
from .pandas_result_writer_repository import PandasResultWriterRepository
