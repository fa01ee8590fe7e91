# File: loggingSetup.py

"""
TsadLab/loggingSetup.py

Sets up the logging configuration for TsadLab.
"""

from contextlib import contextmanager
import logging
from logging.handlers import QueueHandler, QueueListener, RotatingFileHandler
import multiprocessing
import os

LOG_FILE_NAME = 'tsadlab.log'

def setupLogging(logDir='log', level='INFO'):
    """
    Configures the root logger with a rotating file handler.

    Args:
        logDir (str): Directory holding tsadlab.log and its backups.
        level (str): Level name such as 'INFO' or 'DEBUG'; unknown names fall back to INFO.

    Returns:
        str: Path of the active log file.
    """
    logFile = os.path.join(logDir, LOG_FILE_NAME)

    # Create log directory if it doesn't exist
    os.makedirs(logDir, exist_ok=True)

    handler = RotatingFileHandler(logFile, maxBytes=1048576, backupCount=5)  # 1MB per file, 5 backups
    formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')
    handler.setFormatter(formatter)

    logger = logging.getLogger()
    # Replace a handler left by an earlier call on the same file
    for existing in list(logger.handlers):
        if isinstance(existing, RotatingFileHandler) and existing.baseFilename == os.path.abspath(logFile):
            logger.removeHandler(existing)
            existing.close()
    levelValue = logging.getLevelName(str(level).upper())
    logger.setLevel(levelValue if isinstance(levelValue, int) else logging.INFO)
    logger.addHandler(handler)
    return logFile

# Spacer for readability
# ------------------------------------------------------------------------------

def initWorkerLogging(queue, level):
    """
    Process pool initializer: the worker's root logger only forwards records
    to the parent through the queue.

    Handlers inherited from a forked parent are dropped, and the queue handler
    keeps logging from installing its default stderr handler.
    """
    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(QueueHandler(queue))
    root.setLevel(level)

@contextmanager
def workerLogging():
    """
    Forwards log records of worker processes to the handlers of this process.

    Yields:
        tuple: (initializer, initargs) for a ProcessPoolExecutor.
    """
    root = logging.getLogger()
    queue = multiprocessing.Queue()
    listener = QueueListener(queue, *root.handlers, respect_handler_level=True)
    listener.start()
    try:
        yield initWorkerLogging, (queue, root.level)
    finally:
        listener.stop()
        queue.close()
        queue.join_thread()
