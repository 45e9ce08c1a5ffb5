#!python
import unittest
import os
import shutil
import tempfile

from pyPose6D.io.class_lists import load_symmetric,load_class_names
from pyPose6D.io.atomic_write import atomic_write
from pyPose6D.core.Errors import ParseError

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)),'data')


class class_lists_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_defaults(self):
        '''Are the shipped YCB-V lists read?'''
        self.assertEqual(load_symmetric(),frozenset([13,16,19,20,21]))
        names = load_class_names()
        self.assertEqual(len(names),21)
        self.assertEqual(names[1],'002_master_chef_can')
        self.assertEqual(names[21],'061_foam_brick')

    def test_comments(self):
        '''Are comments and trailing comments skipped?'''
        self.assertEqual(load_symmetric(os.path.join(DATA,'symmetric.txt')),frozenset([13,16]))

    def test_errors(self):
        '''Do malformed lines name their line number?'''
        path = os.path.join(self.tmp,'sym.txt')
        with open(path,'w') as f:
            f.write('# ids\n1\n\nbowl\n')
        with self.assertRaises(ParseError) as cm:
            load_symmetric(path)
        self.assertEqual(cm.exception.line,4)

        path = os.path.join(self.tmp,'names.txt')
        with open(path,'w') as f:
            f.write('1 can\nbox\n')
        with self.assertRaises(ParseError) as cm:
            load_class_names(path)
        self.assertEqual(cm.exception.line,2)


class atomic_write_TestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_replace(self):
        '''Is the target replaced only when writing succeeds?'''
        path = os.path.join(self.tmp,'sub','out.txt')
        with atomic_write(path) as f:
            f.write('first\n')
        with open(path) as f:
            self.assertEqual(f.read(),'first\n')

        with self.assertRaises(RuntimeError):
            with atomic_write(path) as f:
                f.write('partial')
                raise RuntimeError('interrupted')
        with open(path) as f:
            self.assertEqual(f.read(),'first\n')
        self.assertEqual(os.listdir(os.path.dirname(path)),['out.txt'])


if __name__ == '__main__':
    for case in (class_lists_TestCase,atomic_write_TestCase):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
