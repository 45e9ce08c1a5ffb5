import pint
import numpy as np


class UnitConverter(object):
    r'''Length conversion at the dataset boundary

    **Description**

        pyPose6D works in meters throughout. Datasets in the BOP layout store
        translations, model vertices and diameters in millimeters, and the
        result files exchanged with the BOP toolkit do the same. This class
        wraps a `Pint <https://pint.readthedocs.io>`_ registry so that the
        conversion happens in exactly one place when data enters or leaves
        the library.

    .. note::

        The methods prefixed with "to" accept floats or arrays and return
        plain floats or :class:`numpy.ndarray` objects (the Pint magnitude),
        since the rest of the library does not carry units.

    Example
    -------
    .. code-block:: python

        import pyPose6D

        uc = pyPose6D.util.UnitConverter()

        t_m = uc.toMeters([0.0,0.0,1000.0])          # [0,0,1]
        t_mm = uc.toMillimeters(t_m)                 # [0,0,1000]

        # convert manually using pint
        uc('2.5 cm').to('m').magnitude              # 0.025

    '''
    def __init__(self,dataset_unit='millimeter'):
        r''' Constructor

        Arguments
        ---------
        dataset_unit: str
            Length unit used by files on disk.
        '''
        self.pint = pint.UnitRegistry()
        self.dataset_unit = dataset_unit
        self.length = self.pint.Quantity(1,dataset_unit)
        if self.length.dimensionality != self.pint.Quantity(1,'meter').dimensionality:
            raise ValueError('Dataset unit {} is not a length'.format(dataset_unit))

    def __repr__(self):
        return '<UnitConverter dataset:{} | internal:meter>'.format(self.dataset_unit)

    def __call__(self,unit_string):
        '''Convenience method for accessing the pint UnitRegistry'''
        return self.pint(unit_string)

    def _convert(self,value,source,target):
        scalar = np.ndim(value) == 0
        q = self.pint.Quantity(np.asarray(value,dtype=np.float64),source).to(target)
        return float(q.magnitude) if scalar else np.asarray(q.magnitude)

    def toMeters(self,value,unit=None):
        r'''Convert lengths in the dataset unit (or `unit`) to meters

        Returns
        -------
        value: float or np.ndarray
        '''
        return self._convert(value,unit or self.dataset_unit,'meter')

    def toMillimeters(self,value):
        '''Convert lengths in meters to millimeters'''
        return self._convert(value,'meter','millimeter')

    def toDataset(self,value):
        '''Convert lengths in meters to the dataset unit'''
        return self._convert(value,'meter',self.dataset_unit)


_default = None


def default_converter():
    '''Shared millimeter/meter converter (registry construction is slow)'''
    global _default
    if _default is None:
        _default = UnitConverter()
    return _default
