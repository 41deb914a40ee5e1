__author__ = "causets contributors"
__credits__ = ['causets contributors']
__license__ = "MIT"
__version__ = "0.1.0dev"
__maintainer__ = "causets contributors"
__email__ = None
__status__ = "Development"
