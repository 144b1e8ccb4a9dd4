import unittest

from sut import sum, triangle


class TestSut(unittest.TestCase):
    def testSum1(self):
        self.assertEqual(sum(1, 2, 3), 6)

    def testSum2(self):
        self.assertEqual(sum(2, 5, 1), 8)

    def testSum3(self):
        self.assertEqual(sum(4, 4), 8)

    def testTriangle1(self):
        self.assertEqual(triangle(3, 3, 3), "Equilateral")

    def testTriangle2(self):
        self.assertEqual(triangle(3, 3, 4), "Isosceles")
        self.assertEqual(triangle(4, 3, 3), "Isosceles")

    def testTriangle3(self):
        self.assertEqual(triangle(2, 2, 2), "Equilateral")
        self.assertEqual(triangle(3, 4, 5), "Scalene")

    def testTriangle4(self):
        self.assertEqual(triangle(3, 3, 4), "Isosceles")

    def testTriangle5(self):
        self.assertNotEqual(triangle(3, 4, 5), "Equilateral")

    def testTriangle6(self):
        self.assertNotEqual(triangle(3, 4, 4), "Scalene")
